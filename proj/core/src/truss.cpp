#include "trusslab/truss.hpp"

#include <algorithm>
#include <stdexcept>

namespace trusslab {

namespace {

[[noreturn]] void theorem_violation(const std::string& what) {
    throw std::logic_error("theorem violation (internal bug): " + what);
}

std::string tuple_str(const std::vector<Elem>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

}  // namespace

std::string to_string(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "two-sided";
    }
    return "?";
}

Outcome<Side> side_from_string(std::string_view s) {
    if (s == "left") return Outcome<Side>::success(Side::Left);
    if (s == "right") return Outcome<Side>::success(Side::Right);
    if (s == "two-sided" || s == "twosided") return Outcome<Side>::success(Side::TwoSided);
    return Outcome<Side>::failure("bad_side", {}, "unknown side: " + std::string(s));
}

bool SkewTruss::sigma_is_identity() const {
    for (Elem a = 0; a < size(); ++a)
        if (cocycle(a) != a) return false;
    return true;
}

std::vector<Elem> derive_sigma(const GroupTable& g, const MagmaTable& circ, Side side) {
    std::vector<Elem> s(static_cast<std::size_t>(g.size()));
    for (Elem a = 0; a < g.size(); ++a)
        s[static_cast<std::size_t>(a)] = side == Side::Right ? circ.at(g.one(), a) : circ.at(a, g.one());
    return s;
}

Check check_left_truss_law(const GroupTable& g, const MagmaTable& circ, const std::vector<Elem>& sigma) {
    const int n = g.size();
    for (Elem a = 0; a < n; ++a) {
        const Elem si = g.inv(sigma[static_cast<std::size_t>(a)]);
        for (Elem b = 0; b < n; ++b) {
            const Elem left_part = g.mul(circ.at(a, b), si);
            for (Elem c = 0; c < n; ++c)
                if (circ.at(a, g.mul(b, c)) != g.mul(left_part, circ.at(a, c)))
                    return Check::fail("truss_law", {a, b, c});
        }
    }
    return Check::pass();
}

namespace {

GroupTable opposite_group(const GroupTable& g) { return GroupTable{g.op.transposed(), g.identity, g.inverse}; }

// The right truss law for (g, circ, sigma) is the left law for the opposite
// structure, with witness triples reversed.
Check check_right_truss_law(const GroupTable& g, const MagmaTable& circ, const std::vector<Elem>& sigma) {
    Check c = check_left_truss_law(opposite_group(g), circ.transposed(), sigma);
    if (!c.ok) std::reverse(c.witness->tuple.begin(), c.witness->tuple.end());
    return c;
}

}  // namespace

Outcome<SkewTruss> build_truss(GroupTable group, MagmaTable circ, Side side) {
    using Out = Outcome<SkewTruss>;
    if (group.size() != circ.size())
        return Out::failure("size_mismatch", {},
                            "group has " + std::to_string(group.size()) + " elements, circle table " +
                                std::to_string(circ.size()));
    Check assoc = validate_semigroup(circ);
    if (!assoc.ok)
        return Out::failure("not_associative", assoc.witness->tuple,
                            "circle operation is not associative at " + tuple_str(assoc.witness->tuple));

    if (side == Side::TwoSided) {
        if (auto w = group.abelian_witness())
            return Out::failure("not_abelian", {w->first, w->second},
                                "two-sided trusses require an abelian group");
    }

    std::vector<Elem> sigma = derive_sigma(group, circ, side);
    if (side == Side::Left || side == Side::TwoSided) {
        Check law = check_left_truss_law(group, circ, sigma);
        if (!law.ok)
            return Out::failure("truss_law", law.witness->tuple,
                                "left truss law fails at " + tuple_str(law.witness->tuple));
    }
    if (side == Side::Right) {
        Check law = check_right_truss_law(group, circ, sigma);
        if (!law.ok)
            return Out::failure("truss_law", law.witness->tuple,
                                "right truss law fails at " + tuple_str(law.witness->tuple));
    }
    if (side == Side::TwoSided) {
        std::vector<Elem> right_sigma = derive_sigma(group, circ, Side::Right);
        for (Elem a = 0; a < group.size(); ++a)
            if (right_sigma[static_cast<std::size_t>(a)] != sigma[static_cast<std::size_t>(a)])
                return Out::failure("cocycle_mismatch", {a},
                                    "left and right cocycles disagree at " + std::to_string(a));
        Check law = check_right_truss_law(group, circ, sigma);
        if (!law.ok)
            return Out::failure("truss_law", law.witness->tuple,
                                "right truss law fails at " + tuple_str(law.witness->tuple));
    }
    return Out::success(SkewTruss{std::move(group), std::move(circ), std::move(sigma), side});
}

Outcome<SkewTruss> idempotent_truss(GroupTable group, std::vector<Elem> sigma) {
    using Out = Outcome<SkewTruss>;
    const int n = group.size();
    if (sigma.size() != static_cast<std::size_t>(n))
        return Out::failure("size_mismatch", {}, "sigma must have one entry per element");
    for (Elem a = 0; a < n; ++a) {
        Elem sa = sigma[static_cast<std::size_t>(a)];
        if (sa < 0 || sa >= n) return Out::failure("entry_out_of_range", {a}, "sigma entry out of range");
    }
    for (Elem a = 0; a < n; ++a) {
        Elem sa = sigma[static_cast<std::size_t>(a)];
        if (sigma[static_cast<std::size_t>(sa)] != sa)
            return Out::failure("not_idempotent", {a},
                                "sigma(sigma(" + std::to_string(a) + ")) != sigma(" + std::to_string(a) + ")");
    }
    MagmaTable circ = MagmaTable::from_fn(n, [&](Elem a, Elem) { return sigma[static_cast<std::size_t>(a)]; });
    auto built = build_truss(std::move(group), std::move(circ), Side::Left);
    if (!built.ok()) theorem_violation("idempotent construction rejected: " + built.error().message);
    if (built.value().sigma != sigma) theorem_violation("idempotent construction derived a different cocycle");
    return built;
}

SkewTruss mirror(const SkewTruss& t) {
    Side flipped = t.side == Side::Left ? Side::Right : t.side == Side::Right ? Side::Left : Side::TwoSided;
    // The cocycle array is unchanged: a o^T 1 = 1 o a.
    return SkewTruss{opposite_group(t.group), t.circ.transposed(), t.sigma, flipped};
}

ActionPair derive_actions(const SkewTruss& t) {
    if (t.side == Side::Right)
        throw std::invalid_argument("derive_actions: defined for left trusses; apply mirror() first");
    const int n = t.size();
    const GroupTable& g = t.group;
    MagmaTable lambda =
        MagmaTable::from_fn(n, [&](Elem a, Elem b) { return g.mul(g.inv(t.cocycle(a)), t.cir(a, b)); });
    MagmaTable mu = MagmaTable::from_fn(n, [&](Elem a, Elem b) { return g.mul(t.cir(a, b), g.inv(t.cocycle(a))); });

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (lambda.at(a, g.mul(b, c)) != g.mul(lambda.at(a, b), lambda.at(a, c)))
                    theorem_violation("lambda_" + std::to_string(a) + " is not a group endomorphism at " +
                                      tuple_str({b, c}));
                if (mu.at(a, g.mul(b, c)) != g.mul(mu.at(a, b), mu.at(a, c)))
                    theorem_violation("mu_" + std::to_string(a) + " is not a group endomorphism at " +
                                      tuple_str({b, c}));
                if (lambda.at(t.cir(a, b), c) != lambda.at(a, lambda.at(b, c)))
                    theorem_violation("lambda is not a semigroup action at " + tuple_str({a, b, c}));
                if (mu.at(t.cir(a, b), c) != mu.at(a, mu.at(b, c)))
                    theorem_violation("mu is not a semigroup action at " + tuple_str({a, b, c}));
            }
    return ActionPair{std::move(lambda), std::move(mu)};
}

FormsReport check_equivalent_forms(const SkewTruss& t) {
    if (t.side == Side::Right) return check_equivalent_forms(mirror(t));
    const int n = t.size();
    const GroupTable& g = t.group;
    ActionPair acts = derive_actions(t);
    // kappa_a(b) = a o b; kappahat_a(c) = sigma(a)^- & (a o c), coded apart
    // from the lambda table on purpose.
    auto kappahat = [&](Elem a, Elem c) { return g.mul(g.inv(t.cocycle(a)), t.cir(a, c)); };
    HeapView heap(g);

    FormsReport rep;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                ++rep.triples_checked;
                const Elem lhs = t.cir(a, g.mul(b, c));
                if (lhs != g.mul(t.cir(a, b), acts.lambda.at(a, c)))
                    theorem_violation("lambda form fails at " + tuple_str({a, b, c}));
                if (lhs != g.mul(acts.mu.at(a, b), t.cir(a, c)))
                    theorem_violation("mu form fails at " + tuple_str({a, b, c}));
                if (lhs != g.mul(t.cir(a, b), kappahat(a, c)))
                    theorem_violation("kappa form fails at " + tuple_str({a, b, c}));
            }
    rep.lambda_form = rep.mu_form = rep.kappa_form = true;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                for (Elem d = 0; d < n; ++d) {
                    ++rep.quadruples_checked;
                    if (t.cir(a, heap.op(b, c, d)) != heap.op(t.cir(a, b), t.cir(a, c), t.cir(a, d)))
                        theorem_violation("heap distributivity fails at " + tuple_str({a, b, c, d}));
                }
    rep.heap_form = true;
    return rep;
}

SkewTruss translate_family(const SkewTruss& t, Elem e) {
    const int n = t.size();
    if (e < 0 || e >= n) throw std::invalid_argument("translate_family: base point out of range");
    const GroupTable& g = t.group;
    MagmaTable op_e = MagmaTable::from_fn(n, [&](Elem a, Elem b) { return g.mul(g.mul(a, g.inv(e)), b); });
    std::vector<Elem> inv_e(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a) inv_e[static_cast<std::size_t>(a)] = g.mul(g.mul(e, g.inv(a)), e);
    GroupTable group_e{std::move(op_e), e, std::move(inv_e)};
    if (!validate_group(group_e.op).ok()) theorem_violation("translated group table is not a group");

    Side side = t.side;
    if (side == Side::TwoSided) {
        bool central = true;
        for (Elem a = 0; a < n && central; ++a) central = t.cir(a, e) == t.cir(e, a);
        if (!central) side = Side::Left;
    }
    auto built = build_truss(std::move(group_e), t.circ, side);
    if (!built.ok()) theorem_violation("family construction rejected: " + built.error().message);
    return std::move(built).value();
}

namespace {

Outcome<std::vector<Elem>> inverse_of_bijection(const std::vector<Elem>& f, int n) {
    std::vector<Elem> finv(static_cast<std::size_t>(n), -1);
    for (Elem a = 0; a < n; ++a) {
        Elem v = f[static_cast<std::size_t>(a)];
        if (v < 0 || v >= n)
            return Outcome<std::vector<Elem>>::failure("not_bijective", {a}, "map entry out of range");
        if (finv[static_cast<std::size_t>(v)] != -1)
            return Outcome<std::vector<Elem>>::failure("not_bijective", {finv[static_cast<std::size_t>(v)], a},
                                                       "two elements share the image " + std::to_string(v));
        finv[static_cast<std::size_t>(v)] = a;
    }
    return Outcome<std::vector<Elem>>::success(std::move(finv));
}

}  // namespace

Outcome<SkewTruss> port_structure(const SkewTruss& t, const GroupTable& target, const std::vector<Elem>& f) {
    using Out = Outcome<SkewTruss>;
    const int n = t.size();
    if (target.size() != n || f.size() != static_cast<std::size_t>(n))
        return Out::failure("size_mismatch", {}, "target and map must match the truss carrier");
    auto finv = inverse_of_bijection(f, n);
    if (!finv.ok()) return Out::failure(finv.error());
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (f[static_cast<std::size_t>(target.mul(a, b))] !=
                t.dia(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                return Out::failure("not_homomorphism", {a, b}, "f is not a group homomorphism at " +
                                                                    tuple_str({a, b}));
    MagmaTable circ_f = MagmaTable::from_fn(n, [&](Elem a, Elem b) {
        return finv.value()[static_cast<std::size_t>(
            t.cir(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))];
    });
    auto built = build_truss(target, std::move(circ_f), t.side);
    if (!built.ok()) theorem_violation("ported structure rejected: " + built.error().message);
    for (Elem a = 0; a < n; ++a)
        if (built.value().cocycle(a) !=
            finv.value()[static_cast<std::size_t>(t.cocycle(f[static_cast<std::size_t>(a)]))])
            theorem_violation("ported cocycle is not f^-1 sigma f");
    return built;
}

Outcome<SkewTruss> port_structure(const SkewTruss& t, const MagmaTable& target, const std::vector<Elem>& g) {
    using Out = Outcome<SkewTruss>;
    const int n = t.size();
    if (target.size() != n || g.size() != static_cast<std::size_t>(n))
        return Out::failure("size_mismatch", {}, "target and map must match the truss carrier");
    auto ginv = inverse_of_bijection(g, n);
    if (!ginv.ok()) return Out::failure(ginv.error());
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (g[static_cast<std::size_t>(target.at(a, b))] !=
                t.cir(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]))
                return Out::failure("not_homomorphism", {a, b},
                                    "g is not a semigroup homomorphism at " + tuple_str({a, b}));
    const GroupTable& src = t.group;
    MagmaTable op_g = MagmaTable::from_fn(n, [&](Elem a, Elem b) {
        return ginv.value()[static_cast<std::size_t>(
            src.mul(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)]))];
    });
    Elem id_g = ginv.value()[static_cast<std::size_t>(src.one())];
    std::vector<Elem> inv_g(static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a)
        inv_g[static_cast<std::size_t>(a)] =
            ginv.value()[static_cast<std::size_t>(src.inv(g[static_cast<std::size_t>(a)]))];
    GroupTable group_g{std::move(op_g), id_g, std::move(inv_g)};
    if (!validate_group(group_g.op).ok()) theorem_violation("ported group table is not a group");
    auto built = build_truss(std::move(group_g), target, t.side);
    if (!built.ok()) theorem_violation("ported structure rejected: " + built.error().message);
    for (Elem a = 0; a < n; ++a)
        if (built.value().cocycle(a) !=
            ginv.value()[static_cast<std::size_t>(t.cocycle(g[static_cast<std::size_t>(a)]))])
            theorem_violation("ported cocycle is not g^-1 sigma g");
    return built;
}

SigmaPowerReport sigma_power_report(const SkewTruss& t) {
    if (t.side == Side::Right) return sigma_power_report(mirror(t));
    const int n = t.size();
    const GroupTable& g = t.group;
    SigmaPowerReport rep;

    rep.identity_central = true;
    for (Elem a = 0; a < n; ++a)
        if (t.cir(a, g.one()) != t.cir(g.one(), a)) {
            rep.identity_central = false;
            rep.centrality_witness = Witness{"identity_central", {a}};
            break;
        }
    if (!rep.identity_central) return rep;

    // Powers sigma^1, sigma^2, ... as maps, iterated until the first repeat.
    std::vector<std::vector<Elem>> powers;
    powers.push_back(t.sigma);
    int first_repeat = -1;
    while (first_repeat < 0) {
        std::vector<Elem> next(static_cast<std::size_t>(n));
        for (Elem a = 0; a < n; ++a)
            next[static_cast<std::size_t>(a)] = t.cocycle(powers.back()[static_cast<std::size_t>(a)]);
        for (std::size_t j = 0; j < powers.size(); ++j)
            if (powers[j] == next) {
                first_repeat = static_cast<int>(j);
                break;
            }
        if (first_repeat < 0) powers.push_back(std::move(next));
    }
    rep.preperiod = first_repeat;
    rep.period = static_cast<int>(powers.size()) - first_repeat;
    rep.powers_checked = static_cast<int>(powers.size());

    rep.additivity_ok = rep.group_hom_ok = true;
    for (const auto& s : powers) {
        const Elem e_n = s[static_cast<std::size_t>(g.one())];
        MagmaTable dia_n = MagmaTable::from_fn(n, [&](Elem x, Elem y) { return g.mul(g.mul(x, g.inv(e_n)), y); });
        for (Elem a = 0; a < n && rep.additivity_ok; ++a)
            for (Elem b = 0; b < n; ++b) {
                const Elem lhs = s[static_cast<std::size_t>(g.mul(a, b))];
                if (lhs != g.mul(g.mul(s[static_cast<std::size_t>(a)], g.inv(e_n)), s[static_cast<std::size_t>(b)])) {
                    rep.additivity_ok = false;
                    break;
                }
                if (lhs != dia_n.at(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]))
                    rep.group_hom_ok = false;
            }
    }

    rep.heap_endomorphism_ok = true;
    HeapView heap(g);
    for (Elem a = 0; a < n && rep.heap_endomorphism_ok; ++a)
        for (Elem b = 0; b < n && rep.heap_endomorphism_ok; ++b)
            for (Elem c = 0; c < n; ++c)
                if (t.cocycle(heap.op(a, b, c)) != heap.op(t.cocycle(a), t.cocycle(b), t.cocycle(c))) {
                    rep.heap_endomorphism_ok = false;
                    break;
                }

    // Action form: needs the (n-1)-st circle power of the identity central,
    // i.e. sigma^{n-1}(1) central in (A,o).
    ActionPair acts = derive_actions(t);
    rep.action_form_ok = true;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const Elem prev = i == 0 ? g.one() : powers[i - 1][static_cast<std::size_t>(g.one())];
        bool prev_central = true;
        for (Elem a = 0; a < n && prev_central; ++a) prev_central = t.cir(a, prev) == t.cir(prev, a);
        if (!prev_central) continue;
        ++rep.action_form_checked;
        const auto& s = powers[i];
        for (Elem a = 0; a < n && rep.action_form_ok; ++a)
            for (Elem b = 0; b < n; ++b) {
                const Elem lhs = s[static_cast<std::size_t>(g.mul(a, b))];
                if (lhs != g.mul(s[static_cast<std::size_t>(a)], acts.lambda.at(prev, b)) ||
                    lhs != g.mul(acts.mu.at(prev, a), s[static_cast<std::size_t>(b)])) {
                    rep.action_form_ok = false;
                    break;
                }
            }
    }
    return rep;
}

Check check_cocycle_equivariance(const SkewTruss& t) {
    const SkewTruss& u = t.side == Side::Right ? mirror(t) : t;
    for (Elem a = 0; a < u.size(); ++a)
        for (Elem b = 0; b < u.size(); ++b)
            if (u.cocycle(u.cir(a, b)) != u.cir(a, u.cocycle(b))) return Check::fail("cocycle_equivariance", {a, b});
    return Check::pass();
}

Check check_inverse_identities(const SkewTruss& t) {
    const SkewTruss& u = t.side == Side::Right ? mirror(t) : t;
    const GroupTable& g = u.group;
    for (Elem a = 0; a < u.size(); ++a)
        for (Elem b = 0; b < u.size(); ++b)
            for (Elem c = 0; c < u.size(); ++c) {
                if (u.cir(a, g.mul(g.inv(b), c)) !=
                    g.mul(g.mul(u.cocycle(a), g.inv(u.cir(a, b))), u.cir(a, c)))
                    return Check::fail("inverse_identity_left", {a, b, c});
                if (u.cir(a, g.mul(b, g.inv(c))) !=
                    g.mul(g.mul(u.cir(a, b), g.inv(u.cir(a, c))), u.cocycle(a)))
                    return Check::fail("inverse_identity_right", {a, b, c});
            }
    return Check::pass();
}

Check check_cocycle_conditions(const SkewTruss& t) {
    const SkewTruss& u = t.side == Side::Right ? mirror(t) : t;
    ActionPair acts = derive_actions(u);
    const GroupTable& g = u.group;
    for (Elem a = 0; a < u.size(); ++a)
        for (Elem b = 0; b < u.size(); ++b) {
            const Elem lhs = u.cocycle(u.cir(a, b));
            if (lhs != g.mul(u.cocycle(a), acts.lambda.at(a, u.cocycle(b))))
                return Check::fail("cocycle_condition_lambda", {a, b});
            if (lhs != g.mul(acts.mu.at(a, u.cocycle(b)), u.cocycle(a)))
                return Check::fail("cocycle_condition_mu", {a, b});
        }
    return Check::pass();
}

Check check_action_exchange(const SkewTruss& t) {
    const SkewTruss& u = t.side == Side::Right ? mirror(t) : t;
    ActionPair acts = derive_actions(u);
    const GroupTable& g = u.group;
    for (Elem a = 0; a < u.size(); ++a)
        for (Elem b = 0; b < u.size(); ++b)
            if (g.mul(u.cocycle(a), acts.lambda.at(a, b)) != g.mul(acts.mu.at(a, b), u.cocycle(a)))
                return Check::fail("action_exchange", {a, b});
    return Check::pass();
}

Check check_monoid_cocycle_identity(const SkewTruss& t) {
    const int n = t.size();
    for (Elem e = 0; e < n; ++e) {
        bool is_id = true;
        for (Elem a = 0; a < n && is_id; ++a) is_id = t.cir(e, a) == a && t.cir(a, e) == a;
        if (is_id) {
            if (t.cocycle(e) != t.one()) return Check::fail("monoid_cocycle_identity", {e});
            return Check::pass();
        }
    }
    return Check::pass();  // vacuous: no circle identity
}

}  // namespace trusslab
