#pragma once

#include <cstdint>
#include <vector>

#include "trusslab/rational.hpp"
#include "trusslab/truss.hpp"

namespace trusslab {

/// Group-like linearization of a finite set truss over the exact rationals:
/// the carrier becomes a basis, the comultiplication is diagonal
/// (delta(a) = a (x) a, counit identically 1), the group structure becomes a
/// Hopf algebra with antipode S(a) = a^-, and the circle operation a
/// (possibly non-unital) bialgebra product. All structure maps send basis to
/// basis, but every identity is checked as an identity of multilinear maps:
/// exactly on all basis tuples and, on request, on random rational vectors.
struct LinearizedTruss {
    GroupTable diamond;
    MagmaTable circ;
    std::vector<Elem> sigma;
    std::vector<Elem> antipode;  // S on basis; equals diamond.inverse

    int dim() const { return diamond.size(); }
    Elem unit() const { return diamond.one(); }

    bool operator==(const LinearizedTruss&) const = default;
};

/// Vector in the linearized carrier, indexed by basis element.
using RVec = std::vector<Rational>;

RVec basis_vector(int dim, Elem a);
/// Bilinear extension of a basis product table.
RVec apply_bilinear(const MagmaTable& table, const RVec& x, const RVec& y);
/// Linear extension of a basis map (sigma, antipode, ...).
RVec apply_basis_map(const std::vector<Elem>& m, const RVec& x);
/// Counit: sum of coordinates (every basis element is group-like).
Rational counit(const RVec& x);

/// Builds and fully verifies the linearization of a valid left or two-sided
/// truss. The construction is total; any check failure is an internal error
/// and throws std::logic_error.
LinearizedTruss linearize(const SkewTruss& t);

struct HopfAxiomsReport {
    bool coalgebra_ok = false;          // coassociativity + counit on basis
    bool antipode_ok = false;           // both antipode identities for diamond
    bool circ_coalgebra_map = false;    // circ is a coalgebra morphism
    bool brace_law = false;             // the Sweedler-indexed distributive law
    bool sigma_formula = false;         // sigma(a) = a o 1
    bool sigma_left_linear = false;     // sigma(a o b) = a o sigma(b)
    bool antipode_exchange_left = false;   // a o (S(b) & c) identity
    bool antipode_exchange_right = false;  // a o (b & S(c)) identity
    long basis_triples = 0;
    int random_trials = 0;
    bool random_trials_exact = false;
    bool all() const {
        return coalgebra_ok && antipode_ok && circ_coalgebra_map && brace_law && sigma_formula &&
               sigma_left_linear && antipode_exchange_left && antipode_exchange_right &&
               (random_trials == 0 || random_trials_exact);
    }
};
/// Verifies the defining law, the cocycle characterization, and both
/// antipode-exchange identities on all basis triples, then on
/// `random_trials` random rational vectors (seeded, exact equality).
HopfAxiomsReport verify_hopf_truss_axioms(const LinearizedTruss& h, int random_trials = 10,
                                          std::uint64_t seed = 0x486f7066);

struct HopfFormsReport {
    bool lambda_form = false;
    bool mu_form = false;
    bool kappa_form = false;
    bool heap_form = false;  // a o [b,c,d] with [x,y,z] = x & S(y) & z
    long triples = 0;
    long quadruples = 0;
    bool all() const { return lambda_form && mu_form && kappa_form && heap_form; }
};
HopfFormsReport check_equivalent_hopf_forms(const LinearizedTruss& h);

struct HopfActionsReport {
    bool lambda_module_algebra = false;  // action property + multiplicativity + unit
    bool mu_module_algebra = false;
    bool cocycle_condition_lambda = false;
    bool cocycle_condition_mu = false;
    bool circ_unital = false;            // the bialgebra has a basis identity
    bool unit_cocycle = false;           // sigma(1_o) = 1, when unital
    bool actions_unital = false;         // 1_o acts trivially, when unital
    bool all() const {
        bool base = lambda_module_algebra && mu_module_algebra && cocycle_condition_lambda && cocycle_condition_mu;
        return base && (!circ_unital || (unit_cocycle && actions_unital));
    }
};
/// Builds both Hopf actions and verifies the module-algebra axioms and the
/// two cocycle conditions; the unital extras are checked when the circle
/// product has a basis identity.
HopfActionsReport hopf_actions_and_cocycle(const LinearizedTruss& h);

/// Action tables: lambda(a,b) = S(sigma(a)) & (a o b), mu(a,b) = (a o b) & S(sigma(a)).
MagmaTable hopf_lambda_table(const LinearizedTruss& h);
MagmaTable hopf_mu_table(const LinearizedTruss& h);

/// The hierarchy member at a group-like e: product a & S(e) & b with unit e
/// and antipode S_e(a) = e & S(a) & e, circle unchanged, cocycle a o e.
/// Basis elements are exactly the available group-likes; the vector overload
/// rejects anything that is not a basis vector.
Outcome<LinearizedTruss> hopf_hierarchy(const LinearizedTruss& h, Elem e);
Outcome<LinearizedTruss> hopf_hierarchy(const LinearizedTruss& h, const RVec& e);

/// Hopf brace extraction when the circle product is a group on the basis:
/// bullet a*b = sigma^-1(a) o b, cocycle becomes the identity.
Outcome<LinearizedTruss> extract_hopf_brace(const LinearizedTruss& h);

/// Ports the circle product through a Hopf-algebra isomorphism
/// f: target -> h.diamond (a basis bijection intertwining the group
/// structures); cocycle becomes f^-1 sigma f and the antipode f^-1 S f.
Outcome<LinearizedTruss> port_hopf(const LinearizedTruss& h, const GroupTable& target, const std::vector<Elem>& f);
/// Ports the Hopf product through a bialgebra isomorphism g: target -> (A,o).
Outcome<LinearizedTruss> port_hopf(const LinearizedTruss& h, const MagmaTable& target, const std::vector<Elem>& g);

}  // namespace trusslab
