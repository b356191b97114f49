#include "trusslab/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "trusslab/parallel.hpp"

namespace trusslab {

namespace {

[[noreturn]] void theorem_violation(const std::string& what) {
    throw std::logic_error("theorem violation (internal bug): " + what);
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

bool left_law_holds(const GroupTable& g, const MagmaTable& circ) {
    std::vector<Elem> sigma = derive_sigma(g, circ, Side::Left);
    return check_left_truss_law(g, circ, sigma).ok;
}

// Shared tail: sort tables, flag duplicates, build the verified trusses.
EnumerationResult finish(GroupTable group, std::string mode, std::vector<MagmaTable> tables,
                         std::chrono::steady_clock::time_point start) {
    std::sort(tables.begin(), tables.end());
    EnumerationResult res;
    res.duplicates_detected = std::adjacent_find(tables.begin(), tables.end()) != tables.end();
    if (res.duplicates_detected) tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    res.group = std::move(group);
    res.mode = std::move(mode);
    res.trusses.reserve(tables.size());
    for (auto& tbl : tables) {
        auto built = build_truss(res.group, std::move(tbl), Side::Left);
        if (!built.ok()) theorem_violation("enumerated table rejected by build_truss");
        res.trusses.push_back(std::move(built).value());
    }
    res.total_found = static_cast<long>(res.trusses.size());
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

std::string to_string(IsoNotion n) {
    return n == IsoNotion::GroupSemigroup ? "group_semigroup" : "heap_semigroup";
}

Outcome<EnumerationResult> enumerate_naive(const GroupTable& group, int jobs) {
    using Out = Outcome<EnumerationResult>;
    const int n = group.size();
    if (n > 3)
        return Out::failure("bound_exceeded", {},
                            "naive enumeration iterates n^(n^2) tables and is capped at n=3; "
                            "use enumerate_structured for larger groups");
    const auto start = std::chrono::steady_clock::now();
    const int cells = n * n;
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(n), cells);

    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<MagmaTable> found;
        std::vector<Elem> entries(static_cast<std::size_t>(cells));
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t v = i;
            for (int k = cells - 1; k >= 0; --k) {
                entries[static_cast<std::size_t>(k)] = static_cast<Elem>(v % n);
                v /= n;
            }
            MagmaTable m(n, entries);
            if (!validate_semigroup(m).ok) continue;
            if (!left_law_holds(group, m)) continue;
            found.push_back(std::move(m));
        }
        return found;
    };

    std::vector<MagmaTable> all;
    for (auto& part : run_chunked(total, jobs, chunk))
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return Out::success(finish(group, "naive", std::move(all), start));
}

std::vector<std::vector<Elem>> group_endomorphisms(const GroupTable& g) {
    const int n = g.size();
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> map(static_cast<std::size_t>(n), -1);
    // Backtracking over images with incremental product consistency.
    auto rec = [&](auto&& self, Elem next) -> void {
        if (next == n) {
            out.push_back(map);
            return;
        }
        for (Elem img = 0; img < n; ++img) {
            map[static_cast<std::size_t>(next)] = img;
            bool fine = true;
            for (Elem a = 0; a <= next && fine; ++a)
                for (Elem b = 0; b <= next && fine; ++b) {
                    if (a != next && b != next) continue;
                    Elem prod = g.mul(a, b);
                    if (prod > next) continue;
                    fine = g.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) ==
                           map[static_cast<std::size_t>(prod)];
                }
            if (fine) self(self, next + 1);
        }
        map[static_cast<std::size_t>(next)] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct StructuredSearch {
    const GroupTable& g;
    const std::vector<std::vector<Elem>>& endos;
    const std::vector<Elem>& sigma;
    std::vector<const std::vector<Elem>*> chosen;  // lambda_a per element
    std::vector<std::vector<Elem>> circ_rows;      // row a filled once lambda_a is chosen
    std::vector<MagmaTable>* out;

    bool cocycle_compatible(Elem a, const std::vector<Elem>& lam) const {
        const int n = g.size();
        const Elem sa = sigma[static_cast<std::size_t>(a)];
        for (Elem b = 0; b < n; ++b) {
            const Elem ab = g.mul(sa, lam[static_cast<std::size_t>(b)]);  // a o b
            if (sigma[static_cast<std::size_t>(ab)] !=
                g.mul(sa, lam[static_cast<std::size_t>(sigma[static_cast<std::size_t>(b)])]))
                return false;
        }
        return true;
    }

    bool action_consistent(Elem upto) const {
        const int n = g.size();
        for (Elem x = 0; x <= upto; ++x)
            for (Elem y = 0; y <= upto; ++y) {
                const Elem t = circ_rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                if (t > upto) continue;
                const auto& lx = *chosen[static_cast<std::size_t>(x)];
                const auto& ly = *chosen[static_cast<std::size_t>(y)];
                const auto& lt = *chosen[static_cast<std::size_t>(t)];
                for (Elem b = 0; b < n; ++b)
                    if (lt[static_cast<std::size_t>(b)] !=
                        lx[static_cast<std::size_t>(ly[static_cast<std::size_t>(b)])])
                        return false;
            }
        return true;
    }

    void run(const std::vector<std::vector<const std::vector<Elem>*>>& compat, Elem next) {
        const int n = g.size();
        if (next == n) {
            std::vector<Elem> entries;
            entries.reserve(static_cast<std::size_t>(n) * n);
            for (Elem a = 0; a < n; ++a)
                entries.insert(entries.end(), circ_rows[static_cast<std::size_t>(a)].begin(),
                               circ_rows[static_cast<std::size_t>(a)].end());
            MagmaTable circ(n, std::move(entries));
            // Filter of record: associativity plus the truss law.
            if (!validate_semigroup(circ).ok) return;
            if (!left_law_holds(g, circ)) return;
            out->push_back(std::move(circ));
            return;
        }
        for (const auto* lam : compat[static_cast<std::size_t>(next)]) {
            chosen[static_cast<std::size_t>(next)] = lam;
            auto& row = circ_rows[static_cast<std::size_t>(next)];
            const Elem sa = sigma[static_cast<std::size_t>(next)];
            for (Elem b = 0; b < n; ++b)
                row[static_cast<std::size_t>(b)] = g.mul(sa, (*lam)[static_cast<std::size_t>(b)]);
            if (action_consistent(next)) run(compat, next + 1);
        }
        chosen[static_cast<std::size_t>(next)] = nullptr;
    }
};

}  // namespace

Outcome<EnumerationResult> enumerate_structured(const GroupTable& group, int jobs, int bound) {
    using Out = Outcome<EnumerationResult>;
    const int n = group.size();
    if (n > bound)
        return Out::failure("bound_exceeded", {},
                            "structured enumeration is capped at n=" + std::to_string(bound) +
                                "; raise the bound explicitly if you accept the cost");
    // n^n cocycle candidates must fit the 64-bit search index; 12^12 is
    // already far beyond any sensible run.
    if (n > 12)
        return Out::failure("bound_exceeded", {},
                            "the cocycle search space n^n does not fit the search index for n > 12");
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::vector<Elem>> endos = group_endomorphisms(group);
    const std::uint64_t total_sigma = ipow(static_cast<std::uint64_t>(n), n);

    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<MagmaTable> found;
        std::vector<Elem> sigma(static_cast<std::size_t>(n));
        std::vector<std::vector<const std::vector<Elem>*>> compat(static_cast<std::size_t>(n));
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t v = i;
            for (int k = n - 1; k >= 0; --k) {
                sigma[static_cast<std::size_t>(k)] = static_cast<Elem>(v % n);
                v /= n;
            }
            StructuredSearch search{group, endos, sigma,
                                    std::vector<const std::vector<Elem>*>(static_cast<std::size_t>(n), nullptr),
                                    std::vector<std::vector<Elem>>(static_cast<std::size_t>(n),
                                                                   std::vector<Elem>(static_cast<std::size_t>(n))),
                                    &found};
            bool dead = false;
            for (Elem a = 0; a < n && !dead; ++a) {
                auto& list = compat[static_cast<std::size_t>(a)];
                list.clear();
                for (const auto& lam : endos)
                    if (search.cocycle_compatible(a, lam)) list.push_back(&lam);
                dead = list.empty();
            }
            if (dead) continue;
            search.run(compat, 0);
        }
        return found;
    };

    std::vector<MagmaTable> all;
    for (auto& part : run_chunked(total_sigma, jobs, chunk))
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return Out::success(finish(group, "structured", std::move(all), start));
}

namespace {

// Transport of a circle table along a carrier bijection f: new(x,y) =
// f(old(f^-1 x, f^-1 y)).
MagmaTable transport(const MagmaTable& circ, const std::vector<Elem>& f, const std::vector<Elem>& finv) {
    return MagmaTable::from_fn(circ.size(), [&](Elem x, Elem y) {
        return f[static_cast<std::size_t>(circ.at(finv[static_cast<std::size_t>(x)],
                                                  finv[static_cast<std::size_t>(y)]))];
    });
}

std::vector<Elem> invert(const std::vector<Elem>& f) {
    std::vector<Elem> inv(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) inv[static_cast<std::size_t>(f[a])] = static_cast<Elem>(a);
    return inv;
}

}  // namespace

EnumerationResult classify(EnumerationResult result, IsoNotion notion) {
    const GroupTable& g = result.group;
    const int n = g.size();

    std::vector<std::vector<Elem>> maps = automorphisms(g);
    if (notion == IsoNotion::HeapSemigroup) {
        std::vector<std::vector<Elem>> heap_maps;
        heap_maps.reserve(maps.size() * static_cast<std::size_t>(n));
        for (Elem t = 0; t < n; ++t)
            for (const auto& a : maps) {
                std::vector<Elem> f(static_cast<std::size_t>(n));
                for (Elem x = 0; x < n; ++x)
                    f[static_cast<std::size_t>(x)] = g.mul(t, a[static_cast<std::size_t>(x)]);
                heap_maps.push_back(std::move(f));
            }
        maps = std::move(heap_maps);
    }

    Classification cls;
    cls.notion = notion;
    cls.class_of.assign(result.trusses.size(), -1);

    std::map<MagmaTable, int> key_to_class;
    for (std::size_t i = 0; i < result.trusses.size(); ++i) {
        const MagmaTable& circ = result.trusses[i].circ;
        MagmaTable best = circ;
        for (const auto& f : maps) {
            MagmaTable cand = transport(circ, f, invert(f));
            if (cand < best) best = std::move(cand);
        }
        auto [it, inserted] = key_to_class.try_emplace(std::move(best), cls.class_count);
        if (inserted) ++cls.class_count;
        cls.class_of[i] = it->second;
    }

    cls.representatives.assign(static_cast<std::size_t>(cls.class_count), -1);
    for (std::size_t i = 0; i < result.trusses.size(); ++i) {
        int c = cls.class_of[i];
        int& rep = cls.representatives[static_cast<std::size_t>(c)];
        if (rep < 0 || result.trusses[i].circ < result.trusses[static_cast<std::size_t>(rep)].circ)
            rep = static_cast<int>(i);
    }

    if (notion == IsoNotion::GroupSemigroup) result.group_semigroup = std::move(cls);
    else result.heap_semigroup = std::move(cls);
    return result;
}

}  // namespace trusslab
