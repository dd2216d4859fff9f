#include "plurilab/infer.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

namespace plurilab::infer {

namespace {

using reid::Basket;
using reid::QuotientType;

// (1/12) m(m-1)(2m-1) K^3 - (2m-1) chi
Rat poly_part(long m, const Int& chi, const Rat& k3) {
    Rat a(Int(m) * (m - 1) * (2 * m - 1), 12);
    a.canonicalize();
    return a * k3 - Rat(2 * m - 1) * Rat(chi);
}

// x(r-x)/2r at x = b m mod r, the increment R_{m+1}(Q) - R_m(Q).
Rat increment(long b, long r, long m) {
    long x = (b % r) * (m % r) % r;
    Rat v(Int(x) * (r - x), Int(2) * r);
    v.canonicalize();
    return v;
}

std::vector<long> odd_primes_up_to(long n) {
    std::vector<long> out;
    for (long p = 3; p <= n; p += 2) {
        bool prime = true;
        for (long d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(p);
    }
    return out;
}

// Columns of the search: one per conjugation-normalized type, coordinates
// [R_2, R_3-R_2, ..., R_M-R_{M-1}] (all nonnegative). Families are kept
// contiguous in descending r so that denominator bookkeeping can prune:
// once the walk passes below family r, no remaining type can change the
// p-part of the partial sum for any odd prime p > r.
struct Columns {
    long m_max;
    long r_max;
    std::size_t ncoord;
    std::vector<QuotientType> types;      // descending r, descending R_2 inside
    std::vector<std::vector<Rat>> coord;  // aligned with types
    std::vector<long> primes;             // odd primes <= r_max

    Columns(long r_max_, long m_max_) : m_max(m_max_), r_max(r_max_) {
        ncoord = static_cast<std::size_t>(m_max - 1);
        for (long r = r_max; r >= 2; --r) {
            std::size_t first = types.size();
            for (long b = 1; 2 * b <= r; ++b)
                if (std::gcd(b, r) == 1) {
                    types.push_back({b, r});
                    std::vector<Rat> v;
                    v.reserve(ncoord);
                    v.push_back(reid::correction({b, r}, 2));
                    for (long m = 2; m < m_max; ++m) v.push_back(increment(b, r, m));
                    coord.push_back(std::move(v));
                }
            std::vector<std::size_t> idx(types.size() - first);
            std::iota(idx.begin(), idx.end(), first);
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b2) {
                int c = cmp(coord[a][0], coord[b2][0]);
                if (c != 0) return c > 0;
                return types[a].b < types[b2].b;
            });
            std::vector<QuotientType> t2(idx.size());
            std::vector<std::vector<Rat>> c2(idx.size());
            for (std::size_t k = 0; k < idx.size(); ++k) {
                t2[k] = types[idx[k]];
                c2[k] = std::move(coord[idx[k]]);
            }
            std::copy(t2.begin(), t2.end(), types.begin() + first);
            std::move(c2.begin(), c2.end(), coord.begin() + first);
        }
        primes = odd_primes_up_to(r_max);
    }
};

struct ClosestPartial {
    Rat gap{-1};  // remaining R_2 mass; negative = unset
    std::vector<long> counts;
};

// Numeric policies: exact bookkeeping over a fixed per-coordinate scale.
struct Int64Policy {
    using Num = long long;
    static Num gcd(Num a, Num b) { return std::gcd(a, b); }
};
struct BigPolicy {
    using Num = Int;
    static Num gcd(const Num& a, const Num& b) {
        Num g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
};

// Exact multiset cover: find every multiset of at most size_max columns
// whose coordinate sums equal the scaled target. Pruning:
//   - per-coordinate suffix-max capacity,
//   - monotone partial sums (never exceed the target),
//   - denominator valuations at family boundaries.
template <class Policy>
class CoverSearch {
    using Num = typename Policy::Num;

  public:
    CoverSearch(const Columns& cols, std::vector<Num> scale, std::vector<Num> target,
                std::vector<Int> target_den, long size_max)
        : cols_(cols), scale_(std::move(scale)), target_(std::move(target)),
          target_den_(std::move(target_den)), size_max_(size_max) {
        const std::size_t n = cols_.types.size(), nc = cols_.ncoord;
        val_.resize(n, std::vector<Num>(nc));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < nc; ++x) {
                Rat scaled = cols_.coord[j][x] * Rat(to_int(scale_[x]));
                scaled.canonicalize();
                val_[j][x] = to_num(scaled.get_num());
            }
        suffmax_.assign(n + 1, std::vector<Num>(nc, Num(0)));
        for (std::size_t j = n; j-- > 0;)
            for (std::size_t x = 0; x < nc; ++x)
                suffmax_[j][x] = std::max(suffmax_[j + 1][x], val_[j][x]);
        // denominator high parts of the target per family boundary
        for (long r = 1; r <= cols_.r_max; ++r) {
            std::vector<Int> row(nc);
            for (std::size_t x = 0; x < nc; ++x) row[x] = strip_low(target_den_[x], r);
            target_high_.push_back(std::move(row));
        }
        part_.assign(nc, Num(0));
        counts_.assign(n, 0);
    }

    std::vector<std::vector<long>> run(ClosestPartial* closest) {
        closest_ = closest;
        for (const auto& t : target_)
            if (t < 0) return {};
        dfs(0, size_max_);
        return std::move(found_);
    }

  private:
    static Num to_num(const Int& v) {
        if constexpr (std::is_same_v<Num, long long>) {
            return static_cast<long long>(v.get_si());
        } else {
            return v;
        }
    }

    static Int to_int(const Num& v) {
        if constexpr (std::is_same_v<Num, long long>) {
            return Int(static_cast<long>(v));
        } else {
            return v;
        }
    }

    // d with the factor 2 and every odd prime <= r removed
    Int strip_low(Int d, long r) const {
        while (d % 2 == 0) d /= 2;
        for (long p : cols_.primes) {
            if (p > r) break;
            while (d % p == 0) d /= p;
        }
        return d;
    }

    // primes above r are frozen: the partial denominators must match the
    // target's exactly there, or nothing below can complete the sum
    bool boundary_ok(long r) {
        for (std::size_t x = 0; x < cols_.ncoord; ++x) {
            Num g = Policy::gcd(part_[x] >= 0 ? part_[x] : Num(-part_[x]), scale_[x]);
            Int den = to_int(scale_[x]) / to_int(g);
            if (strip_low(den, r) != target_high_[static_cast<std::size_t>(r - 1)][x])
                return false;
        }
        return true;
    }

    void note_closest(const Num& rem2) {
        if (!closest_) return;
        Rat gap{to_int(rem2), to_int(scale_[0])};
        gap.canonicalize();
        if (closest_->gap < 0 || gap < closest_->gap) {
            closest_->gap = gap;
            closest_->counts = counts_;
        }
    }

    void dfs(std::size_t i, long rem) {
        const std::size_t n = cols_.types.size(), nc = cols_.ncoord;
        if (!boundary_ok(i < n ? cols_.types[i].r : 1)) return;
        if (part_[0] == target_[0]) {
            for (std::size_t x = 1; x < nc; ++x)
                if (part_[x] != target_[x]) return;
            found_.push_back(counts_);
            return;
        }
        note_closest(target_[0] - part_[0]);
        if (rem == 0) return;
        long family = i < n ? cols_.types[i].r : 1;
        for (std::size_t j = i; j < n; ++j) {
            if (cols_.types[j].r < family) {
                family = cols_.types[j].r;
                if (!boundary_ok(family)) return;
            }
            for (std::size_t x = 0; x < nc; ++x)
                if (part_[x] + Num(rem) * suffmax_[j][x] < target_[x]) return;
            long k = 0;
            while (k < rem) {
                bool fits = true;
                for (std::size_t x = 0; x < nc; ++x)
                    if (part_[x] + val_[j][x] > target_[x]) {
                        fits = false;
                        break;
                    }
                if (!fits) break;
                for (std::size_t x = 0; x < nc; ++x) part_[x] += val_[j][x];
                ++counts_[j];
                ++k;
            }
            for (; k >= 1; --k) {
                dfs(j + 1, rem - k);
                for (std::size_t x = 0; x < nc; ++x) part_[x] -= val_[j][x];
                --counts_[j];
            }
        }
    }

    const Columns& cols_;
    std::vector<Num> scale_;
    std::vector<Num> target_;
    std::vector<Int> target_den_;
    long size_max_;
    std::vector<std::vector<Num>> val_;
    std::vector<std::vector<Num>> suffmax_;
    std::vector<std::vector<Int>> target_high_;  // [r-1][x]
    std::vector<Num> part_;
    std::vector<long> counts_;
    std::vector<std::vector<long>> found_;
    ClosestPartial* closest_ = nullptr;
};

// Shared per-problem state: columns plus the per-coordinate denominator
// scale lcm(type denominators). The int64 fast path is used whenever the
// scaled values fit comfortably; otherwise exact big integers.
struct SearchSpace {
    Columns cols;
    std::vector<Int> base_scale;

    SearchSpace(long r_max, long m_max) : cols(r_max, m_max) {
        base_scale.assign(cols.ncoord, 1);
        for (const auto& row : cols.coord)
            for (std::size_t x = 0; x < cols.ncoord; ++x)
                mpz_lcm(base_scale[x].get_mpz_t(), base_scale[x].get_mpz_t(),
                        row[x].get_den().get_mpz_t());
    }

    // returns baskets matching the exact rational targets
    std::vector<std::vector<long>> solve(const std::vector<Rat>& targets, long size_max,
                                         ClosestPartial* closest) const {
        const std::size_t nc = cols.ncoord;
        std::vector<Int> scale(nc), starget(nc), tden(nc);
        Int max_scaled = 0;
        for (std::size_t x = 0; x < nc; ++x) {
            if (targets[x] < 0) return {};
            mpz_lcm(scale[x].get_mpz_t(), base_scale[x].get_mpz_t(),
                    targets[x].get_den().get_mpz_t());
            Rat st = targets[x] * Rat(scale[x]);
            st.canonicalize();
            starget[x] = st.get_num();
            tden[x] = targets[x].get_den();
            max_scaled = std::max(max_scaled, starget[x]);
            for (const auto& row : cols.coord) {
                Rat sv = row[x] * Rat(scale[x]);
                sv.canonicalize();
                max_scaled = std::max(max_scaled, Int(sv.get_num() * (size_max + 1)));
            }
        }
        if (max_scaled < Int("300000000000000000")) {
            auto conv = [](const std::vector<Int>& v) {
                std::vector<long long> out(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_si();
                return out;
            };
            CoverSearch<Int64Policy> search(cols, conv(scale), conv(starget), tden, size_max);
            return search.run(closest);
        }
        CoverSearch<BigPolicy> search(cols, scale, starget, tden, size_max);
        return search.run(closest);
    }

    Basket basket_from_counts(const std::vector<long>& counts) const {
        Basket b;
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j] > 0) b.add(cols.types[j].b, cols.types[j].r, counts[j]);
        return b;
    }
};

std::vector<Rat> targets_for(const std::map<long, Int>& pluri, const Int& chi, const Rat& k3,
                             long m_max) {
    std::vector<Rat> t;
    t.reserve(static_cast<std::size_t>(m_max - 1));
    Rat prev_poly = poly_part(2, chi, k3);
    t.push_back(Rat(pluri.at(2)) - prev_poly);
    for (long m = 2; m < m_max; ++m) {
        Rat next_poly = poly_part(m + 1, chi, k3);
        t.push_back(Rat(pluri.at(m + 1) - pluri.at(m)) - (next_poly - prev_poly));
        prev_poly = next_poly;
    }
    for (auto& v : t) v.canonicalize();
    return t;
}

void validate_problem(const InferenceProblem& p) {
    if (p.pluri.size() < 2 || p.pluri.begin()->first != 2)
        throw std::invalid_argument("inference: plurigenus data must cover m = 2..M with M >= 3");
    long expect = 2;
    for (const auto& [m, v] : p.pluri) {
        if (m != expect)
            throw std::invalid_argument("inference: plurigenus data must be contiguous in m");
        ++expect;
    }
    if (!p.chi && !p.k3)
        throw std::invalid_argument("inference: at most one of chi, K^3 may be absent");
    if (p.r_max < 2) throw std::invalid_argument("inference: r_max must be >= 2");
    if (p.size_max < 0) throw std::invalid_argument("inference: size_max must be >= 0");
    if (p.k3 && *p.k3 <= 0) throw std::invalid_argument("inference: K^3 must be positive");
}

std::string describe_not_found(const InferenceProblem& p, const ClosestPartial& closest,
                               const SearchSpace& space) {
    std::ostringstream os;
    os << "no basket with r <= " << p.r_max << " and at most " << p.size_max
       << " points matches the data exactly";
    if (closest.gap >= 0) {
        os << "; closest partial leaves R_2 gap " << to_string(closest.gap) << " at basket {";
        bool first = true;
        for (std::size_t j = 0; j < closest.counts.size(); ++j)
            if (closest.counts[j] > 0) {
                if (!first) os << ",";
                first = false;
                if (closest.counts[j] > 1) os << closest.counts[j] << "*";
                os << space.cols.types[j].b << "/" << space.cols.types[j].r;
            }
        os << "}";
    }
    return os.str();
}

}  // namespace

Rat solve_k3(const Int& p2, const Int& chi, const Basket& basket) {
    Rat s2(0);
    for (const auto& e : basket.entries())
        s2 += Rat(e.mult) * reid::correction({e.b, e.r}, 2);
    Rat v = 2 * (Rat(p2) + 3 * Rat(chi) - s2);
    v.canonicalize();
    return v;
}

Int solve_chi(const Int& p2, const Rat& k3, const Basket& basket) {
    Rat s2(0);
    for (const auto& e : basket.entries())
        s2 += Rat(e.mult) * reid::correction({e.b, e.r}, 2);
    Rat v = (s2 + k3 / 2 - Rat(p2)) / 3;
    v.canonicalize();
    if (!is_integer(v))
        throw std::domain_error("solve_chi: the data force a non-integral chi(O) = " +
                                to_string(v));
    return v.get_num();
}

InferenceResult infer_basket(const InferenceProblem& p) {
    validate_problem(p);
    const long m_max = p.pluri.rbegin()->first;
    SearchSpace space(p.r_max, m_max);
    std::vector<InferenceResult> matches;
    ClosestPartial closest;

    auto run_known = [&](const Int& chi, const Rat& k3, ClosestPartial* diag) {
        std::vector<InferenceResult> out;
        for (auto& counts : space.solve(targets_for(p.pluri, chi, k3, m_max), p.size_max, diag))
            out.push_back({space.basket_from_counts(counts), chi, k3, true});
        return out;
    };

    if (p.chi && p.k3) {
        matches = run_known(*p.chi, *p.k3, &closest);
    } else if (!p.chi) {
        // chi absent: every coordinate bounds chi through its capacity
        const Rat& k3 = *p.k3;
        Rat lo_acc, hi_acc;
        bool have = false;
        for (std::size_t x = 0; x < space.cols.ncoord; ++x) {
            Rat top(0);
            for (const auto& row : space.cols.coord) top = std::max(top, row[x]);
            Rat cap = Rat(p.size_max) * top;
            Rat base;
            long chi_coef;
            if (x == 0) {
                base = Rat(p.pluri.at(2)) - poly_part(2, 0, k3);
                chi_coef = 3;
            } else {
                long m = static_cast<long>(x) + 1;
                base = Rat(p.pluri.at(m + 1) - p.pluri.at(m)) -
                       (poly_part(m + 1, 0, k3) - poly_part(m, 0, k3));
                chi_coef = 2;
            }
            Rat lo = -base / chi_coef, hi = (cap - base) / chi_coef;
            if (!have) {
                lo_acc = lo;
                hi_acc = hi;
                have = true;
            } else {
                lo_acc = std::max(lo_acc, lo);
                hi_acc = std::min(hi_acc, hi);
            }
        }
        std::vector<Int> chis;
        for (Int c = ceil_rat(lo_acc); c <= floor_rat(hi_acc); ++c) chis.push_back(c);
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        if (chis.size() <= 1 || workers == 1) {
            for (const auto& c : chis)
                for (auto& r : run_known(c, k3, nullptr)) matches.push_back(std::move(r));
        } else {
            std::vector<std::future<std::vector<InferenceResult>>> futs;
            futs.reserve(chis.size());
            for (const auto& c : chis)
                futs.push_back(
                    std::async(std::launch::async, [&, c] { return run_known(c, k3, nullptr); }));
            for (auto& f : futs)
                for (auto& r : f.get()) matches.push_back(std::move(r));
        }
    } else {
        // K^3 absent: solve it at every node from the R_2 partial sum and
        // verify every supplied m; the partial must stay below P_2 + 3 chi.
        const Int& chi = *p.chi;
        Rat bound2 = Rat(p.pluri.at(2)) + 3 * Rat(chi);
        const auto& cols = space.cols;
        std::vector<long> counts(cols.types.size(), 0);
        std::vector<Rat> part(cols.ncoord, Rat(0));
        auto try_record = [&]() {
            Rat k3v = 2 * (Rat(p.pluri.at(2)) + 3 * Rat(chi) - part[0]);
            k3v.canonicalize();
            if (k3v <= 0) return;
            Rat acc(0);
            for (long m = 2; m <= m_max; ++m) {
                acc += part[static_cast<std::size_t>(m - 2)];  // R_2, then increments
                if (poly_part(m, chi, k3v) + acc != Rat(p.pluri.at(m))) return;
            }
            matches.push_back({space.basket_from_counts(counts), chi, k3v, true});
        };
        std::function<void(std::size_t, long)> dfs = [&](std::size_t i, long rem) {
            try_record();
            if (rem == 0 || i == cols.types.size()) return;
            for (std::size_t j = i; j < cols.types.size(); ++j) {
                long k = 0;
                while (k < rem && part[0] + cols.coord[j][0] < bound2) {
                    for (std::size_t x = 0; x < cols.ncoord; ++x) part[x] += cols.coord[j][x];
                    ++counts[j];
                    ++k;
                }
                for (; k >= 1; --k) {
                    dfs(j + 1, rem - k);
                    for (std::size_t x = 0; x < cols.ncoord; ++x) part[x] -= cols.coord[j][x];
                    --counts[j];
                }
            }
        };
        dfs(0, p.size_max);
    }

    std::sort(matches.begin(), matches.end(),
              [](const InferenceResult& a, const InferenceResult& b) {
                  const auto &ka = a.basket.entries(), &kb = b.basket.entries();
                  auto tup = [](const reid::BasketEntry& e) { return std::tuple{e.r, e.b, e.mult}; };
                  if (ka.size() != kb.size()) return ka.size() < kb.size();
                  for (std::size_t i = 0; i < ka.size(); ++i)
                      if (tup(ka[i]) != tup(kb[i])) return tup(ka[i]) < tup(kb[i]);
                  return a.chi < b.chi;
              });
    matches.erase(std::unique(matches.begin(), matches.end(),
                              [](const InferenceResult& a, const InferenceResult& b) {
                                  return a.basket == b.basket && a.chi == b.chi && a.k3 == b.k3;
                              }),
                  matches.end());

    if (matches.empty()) throw not_found_error(describe_not_found(p, closest, space));
    if (matches.size() > 1) {
        std::ostringstream os;
        os << matches.size() << " distinct solutions within the bounds; the supplied window "
           << "m = 2.." << m_max << " does not determine the basket";
        throw ambiguity_error(os.str(), matches);
    }
    return matches.front();
}

}  // namespace plurilab::infer
