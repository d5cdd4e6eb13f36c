#pragma once

// Complex and l-adic associators as truncated series over MPoly: the
// low-degree fixtures, generic group-like series, the two chain rules of the
// path composition table, multiple-polylog extraction, the regularized
// coefficient formula for YX^{k-1}, and the symbolic verifications of the
// depth-reduction (Oi-Ueno) and trilogarithm (Landen) functional equations.
//
// Verification style: the gamma_{1-z} and delta_{10} data are *generic*
// group-like series (one fresh symbol per Lyndon word), the gamma_z series
// is defined by the chain rule, and every derivation step is asserted as an
// exactly-zero MPoly residual. Steps that hold only modulo the 2-cyclic
// relation phi(X,Y)phi(Y,X)=1 are reduced by an explicitly recorded multiple
// of its coefficient relations, never silently.

#include "trilog/freelie.hpp"
#include "trilog/mpoly.hpp"
#include "trilog/ncseries.hpp"
#include "trilog/report.hpp"
#include "trilog/symbols.hpp"
#include "trilog/word.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace trilog {

enum class Side { Complex, Ladic };
inline const char* to_string(Side s) { return s == Side::Complex ? "complex" : "ladic"; }

enum class PathName { GammaZ, Gamma1mZ, GammaMobius, Delta10, Delta0Inf, Trivial };

struct PathLabel {
    PathName name = PathName::Trivial;
    // Paths compose from left to right; these labels document which composite
    // each series belongs to.
    std::string description;
};

struct AssociatorSeries {
    PathLabel path;
    Side side = Side::Ladic;
    RegistryPtr reg;
    PolySeries series{3};
};

struct PolylogValue {
    IndexVector index;
    Side side;
    MPoly value;  // (-1)^depth * coefficient at the regular word
};

/// Group-like completion: builds exp of a Lie element whose Lyndon-word
/// coefficients (as *word* coefficients of the result) match the prescribed
/// values. All remaining coefficients are generated, so every shuffle
/// relation holds structurally.
PolySeries grouplike_from_lyndon_values(unsigned trunc,
                                        const std::function<MPoly(const Word&)>& value);

/// Appendix fixtures, exact at degree <= 3; degrees above 3 are completed
/// with fresh generic symbols.
AssociatorSeries fixture_G0(unsigned n = 3);
AssociatorSeries fixture_f_sigma(unsigned n = 3);
AssociatorSeries fixture_phi(unsigned n = 3, Side side = Side::Complex);

/// Generic group-like series: one fresh symbol (named prefix_word) per
/// Lyndon word of degree <= n; degree-1 symbols zeroed when flagged.
AssociatorSeries generic_grouplike(const std::string& prefix, unsigned n,
                                   bool vanishing_degree_one, RegistryPtr reg,
                                   Side side = Side::Ladic);

/// f(gamma_z)(X,Y) = f(gamma_{1-z})(Y,X) . f(delta_10)(X,Y)
AssociatorSeries chain_rule_1mz(const AssociatorSeries& f_1mz, const AssociatorSeries& phi);

/// f(gamma_{z/(z-1)})(X,Y) = f(gamma_z)(X,Z) . exp(a X); the letter Z is
/// -X-Y on the complex side and log(exp(-Y)exp(-X)) on the l-adic side.
AssociatorSeries chain_rule_mobius(const AssociatorSeries& f_z, const MPoly& axial);

PolylogValue extract_polylog(const AssociatorSeries& f, const IndexVector& k);

/// (-1)^k sum_{t=0}^{k-1} Li_{k-t} rho^t / t!  with  Li_m := -coeff(X^{m-1}Y)
/// and rho := -coeff(X), evaluated on the series' own coefficients.
MPoly lmf_formula(const PolySeries& f, unsigned k);

/// The formula value, with the postcondition coeff(YX^{k-1}) == formula
/// asserted; throws with the residual on failure.
MPoly lmf_regular_coeff(const AssociatorSeries& f, unsigned k);
/// Residual coeff(YX^{k-1}) - formula (zero for group-like series).
MPoly lmf_residual(const PolySeries& f, unsigned k);

/// Coefficients of phi(X,Y)*phi(Y,X) - 1 (one relation per word, zero
/// coefficients omitted). Degree-3 content contains the Euler relation.
std::vector<std::pair<Word, MPoly>> two_cycle_relations_of(const PolySeries& phi);
std::vector<std::pair<Word, MPoly>> two_cycle_relations(unsigned n, Side side = Side::Complex);

/// Named-symbol form (LHS - RHS) of the trilogarithm functional equation on
/// either side; symbols are interned into reg.
MPoly landen3_identity(Side side, const RegistryPtr& reg);
/// Rendered statement text for reports.
std::string landen3_statement(Side side);

Report verify_oiueno(unsigned k, Side side);
Report verify_landen3(Side side);

/// The gamma_z-side derivation output for the character-form cross check:
/// the identity polynomial over named symbols whose generic image is
/// certified zero by verify_landen3.
MPoly landen3_certified_identity(Side side, const RegistryPtr& reg);

}  // namespace trilog
