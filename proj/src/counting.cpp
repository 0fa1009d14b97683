#include "sector/counting.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace sector {

double GroupConfig::main_term(double X) const {
    double m = area_hp / covolume * X * X;
    for (const ExceptionalTerm& e : exceptional)
        m += e.coeff * std::pow(2.0, e.s - 1.0) / e.s * std::pow(X, e.s);
    return m;
}

namespace {

struct Row {
    GaussInt c, d;
};

// Coprime bottom rows with ||c p + d||^2 <= bound, one representative per
// unit orbit: c = 0 contributes only (0, 1); otherwise c is restricted to the
// first quadrant (re > 0, im >= 0) and d ranges over the full disk
// |d + c z|^2 <= bound - |c|^2 y^2.
std::vector<Row> candidate_rows(const Point& p, double bound) {
    std::vector<Row> rows;
    if (bound >= 1.0) rows.push_back({GaussInt(0), GaussInt(1)});

    double y2 = p.y * p.y;
    for (std::int64_t c1 = 1; c1 * c1 <= bound / y2; ++c1) {
        for (std::int64_t c2 = 0; c1 * c1 + c2 * c2 <= bound / y2; ++c2) {
            GaussInt c(c1, c2);
            double cn = static_cast<double>(c.norm());
            double r2 = bound - cn * y2;
            if (r2 < 0.0) break;
            double r = std::sqrt(r2);
            // disk center -c z
            double cx = -(c1 * p.x1 - c2 * p.x2);
            double cy = -(c1 * p.x2 + c2 * p.x1);
            auto d1_lo = static_cast<std::int64_t>(std::ceil(cx - r));
            auto d1_hi = static_cast<std::int64_t>(std::floor(cx + r));
            for (std::int64_t d1 = d1_lo; d1 <= d1_hi; ++d1) {
                double m2 = r2 - (d1 - cx) * (d1 - cx);
                if (m2 < 0.0) continue;
                double m = std::sqrt(m2);
                auto d2_lo = static_cast<std::int64_t>(std::ceil(cy - m));
                auto d2_hi = static_cast<std::int64_t>(std::floor(cy + m));
                for (std::int64_t d2 = d2_lo; d2 <= d2_hi; ++d2) {
                    GaussInt d(d1, d2);
                    if (ggcd(c, d).is_unit()) rows.push_back({c, d});
                }
            }
        }
    }
    return rows;
}

struct RowScan {
    std::vector<CosetHit> hits;  // not yet deduplicated
    std::int64_t candidates = 0;
};

// Scan the imaginary translation parameter of one completed row and key every
// matrix within the threshold.
void scan_row(const Row& row, const Point& p, double threshold, RowScan& out) {
    GMatrix m0;
    if (!try_complete_row(row.c, row.d, m0)) return;  // rows are pre-filtered
    Point q0 = moebius_act(m0, p);
    double w = q0.y * std::sqrt(threshold * threshold - 1.0);
    auto n_lo = static_cast<std::int64_t>(std::ceil(-q0.x2 - w)) - 1;
    auto n_hi = static_cast<std::int64_t>(std::floor(-q0.x2 + w)) + 1;
    for (std::int64_t n2 = n_lo; n2 <= n_hi; ++n2) {
        ++out.candidates;
        double x2 = q0.x2 + static_cast<double>(n2);
        double secv = std::sqrt(x2 * x2 + q0.y * q0.y) / q0.y;
        if (secv > threshold) continue;
        GaussInt shift(0, n2);
        GMatrix m(m0.a + shift * m0.c, m0.b + shift * m0.d, m0.c, m0.d);
        KeyedCoset kc = coset_key_with_rep(m, p);
        out.hits.push_back({kc.key, kc.reduced_rep, secv});
    }
}

bool key_less(const CosetKey& a, const CosetKey& b) {
    if (a.qx != b.qx) return a.qx < b.qx;
    if (a.qu != b.qu) return a.qu < b.qu;
    return a.qv < b.qv;
}

}  // namespace

EnumerationResult enumerate_sector_cosets(const Point& p, double threshold,
                                          const CountOptions& opt) {
    if (!(p.y > 0.0)) throw std::domain_error("enumerate_sector_cosets: y <= 0");
    if (!(threshold >= 1.0)) throw std::domain_error("enumerate_sector_cosets: X < 1");

    double bound = 2.0 * threshold * p.y / std::sqrt(3.0) * opt.safety;
    std::vector<Row> rows = candidate_rows(p, bound);

    int nthreads = std::max(1, opt.threads);
    std::vector<RowScan> scans(static_cast<std::size_t>(nthreads));
    if (nthreads == 1) {
        for (const Row& r : rows) scan_row(r, p, threshold, scans[0]);
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (rows.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t lo = std::min(rows.size(), t * chunk);
            std::size_t hi = std::min(rows.size(), lo + chunk);
            workers.emplace_back([&, lo, hi, t] {
                for (std::size_t i = lo; i < hi; ++i) scan_row(rows[i], p, threshold, scans[t]);
            });
        }
        for (auto& w : workers) w.join();
    }

    // merge with set semantics; a key collision carrying a different reduced
    // representative is resolved algebraically
    std::unordered_map<CosetKey, CosetHit, CosetKeyHash> merged;
    std::int64_t candidates = 0;
    for (const RowScan& sc : scans) {
        candidates += sc.candidates;
        for (const CosetHit& h : sc.hits) {
            auto [it, inserted] = merged.try_emplace(h.key, h);
            if (!inserted && it->second.reduced_rep != h.reduced_rep) {
                if (!same_coset(it->second.reduced_rep, h.reduced_rep))
                    throw std::runtime_error("dedup unsound at this base point");
            }
        }
    }

    EnumerationResult res;
    res.candidates_scanned = candidates;
    res.bound_B = bound;
    res.hits.reserve(merged.size());
    for (const auto& [key, hit] : merged) res.hits.push_back(hit);
    std::sort(res.hits.begin(), res.hits.end(),
              [](const CosetHit& a, const CosetHit& b) { return key_less(a.key, b.key); });

    // audit: every kept coset's reduced representative must satisfy the
    // un-inflated row bound (the derivation 2 X y / sqrt(3) is ours)
    double base_bound = 2.0 * threshold * p.y / std::sqrt(3.0);
    for (const CosetHit& h : res.hits) {
        Point q = moebius_act(h.reduced_rep, p);
        res.audit_ratio = std::max(res.audit_ratio, p.y / q.y / base_bound);
    }
    if (res.audit_ratio > 1.0 + 1e-9)
        throw std::runtime_error("enumerate_sector_cosets: row bound audit failed");

    // sampled refutation: distinct keys must name distinct cosets
    if (res.hits.size() >= 2 && opt.distinct_checks > 0) {
        std::mt19937_64 rng(opt.check_seed);
        std::uniform_int_distribution<std::size_t> pick(0, res.hits.size() - 1);
        for (int k = 0; k < opt.distinct_checks; ++k) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            if (same_coset(res.hits[i].reduced_rep, res.hits[j].reduced_rep))
                throw std::runtime_error("dedup unsound at this base point");
        }
    }
    return res;
}

CountResult count_sector(const Point& p, double X, const GroupConfig& cfg,
                         const CountOptions& opt) {
    if (!(X >= 1.0)) throw std::domain_error("count_sector: X < 1");
    EnumerationResult en = enumerate_sector_cosets(p, X, opt);
    CountResult r;
    r.n = static_cast<std::int64_t>(en.hits.size());
    r.cosets_kept = r.n;
    r.main = cfg.main_term(X);
    r.err = static_cast<double>(r.n) - r.main;
    r.candidates_scanned = en.candidates_scanned;
    r.bound_B = en.bound_B;
    r.audit_ratio = en.audit_ratio;
    return r;
}

double automorphic_sum(const Point& p, const RadialProfile& f, const GroupConfig& cfg,
                       const CountOptions& opt) {
    (void)cfg;
    double W = f.support();
    if (W <= 0.0) return 0.0;
    double threshold = std::cosh(W);  // sec v at the edge of the support
    EnumerationResult en = enumerate_sector_cosets(p, threshold, opt);
    double sum = 0.0;
    for (const CosetHit& h : en.hits) sum += f.value_at_sec(h.sec_v);
    return sum;
}

namespace {

// all Gaussian integers with |re|, |im| <= depth
std::vector<GaussInt> entry_box(int depth) {
    std::vector<GaussInt> v;
    for (std::int64_t re = -depth; re <= depth; ++re)
        for (std::int64_t im = -depth; im <= depth; ++im) v.emplace_back(re, im);
    return v;
}

bool in_box(const GaussInt& z, int depth) {
    return std::llabs(z.re) <= depth && std::llabs(z.im) <= depth;
}

// exact division num / den in Z[i]; false if not divisible
bool gauss_div(const GaussInt& num, const GaussInt& den, GaussInt& out) {
    std::int64_t n = den.norm();
    GaussInt t = num * den.conj();
    if (t.re % n != 0 || t.im % n != 0) return false;
    out = GaussInt(t.re / n, t.im / n);
    return true;
}

std::int64_t oracle_count_at_depth(const Point& p, double X, int depth) {
    std::vector<GaussInt> box = entry_box(depth);
    std::unordered_set<GMatrix, GMatrixHash> kept;

    auto consider = [&](const GaussInt& a, const GaussInt& b, const GaussInt& c,
                        const GaussInt& d) {
        GMatrix m(a, b, c, d);
        if (sec_v(moebius_act(m, p)) <= X) kept.insert(m);
    };

    // det = ad - bc = 1: solve d = (1 + bc)/a for a != 0, else bc = -1
    for (const GaussInt& a : box) {
        if (a.is_zero()) continue;
        for (const GaussInt& b : box) {
            for (const GaussInt& c : box) {
                GaussInt num = GaussInt(1) + b * c;
                GaussInt d;
                if (!gauss_div(num, a, d)) continue;
                if (!in_box(d, depth)) continue;
                consider(a, b, c, d);
            }
        }
    }
    const GaussInt units[4] = {GaussInt(1), GaussInt(-1), GaussInt(0, 1), GaussInt(0, -1)};
    for (const GaussInt& b : units) {
        GaussInt c = -b.conj();  // bc = -1
        for (const GaussInt& d : box) consider(GaussInt(0), b, c, d);
    }

    // pairwise coset dedup, intentionally independent of the geometric keys
    std::vector<GMatrix> reps;
    for (const GMatrix& m : kept) {
        bool fresh = true;
        for (const GMatrix& r : reps) {
            if (same_coset(m, r)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(m);
    }
    return static_cast<std::int64_t>(reps.size());
}

}  // namespace

OracleResult oracle_count(const Point& p, double X, int depth) {
    if (depth < 1) throw std::invalid_argument("oracle_count: depth < 1");
    OracleResult r;
    r.count = oracle_count_at_depth(p, X, depth);
    r.count_prev_depth = depth > 1 ? oracle_count_at_depth(p, X, depth - 1) : 0;
    r.stable = depth > 1 && r.count == r.count_prev_depth;
    return r;
}

std::int64_t ball_count(const Point& p, const Point& q, double x, const CountOptions& opt) {
    if (!(x >= 1.0)) throw std::domain_error("ball_count: x < 1");
    if (!(p.y > 0.0 && q.y > 0.0)) throw std::domain_error("ball_count: y <= 0");

    (void)opt;
    // delta(p, gamma q) <= x forces y(gamma q) >= y_p / (x + sqrt(x^2-1)),
    // so ||c q + d||^2 = y_q / y(gamma q) <= 2 x y_q / y_p covers every row.
    double bound = 2.0 * x * q.y / p.y * (1.0 + 1e-12);
    const std::int64_t budget = 2000000000LL;

    std::unordered_set<GMatrix, GMatrixHash> kept;
    std::int64_t scanned = 0;

    auto scan_translates = [&](const GMatrix& m0) {
        Point q0 = moebius_act(m0, q);
        double rho2 = 2.0 * x * p.y * q0.y - p.y * p.y - q0.y * q0.y;
        if (rho2 < 0.0) return;
        double rho = std::sqrt(rho2);
        double cx = p.x1 - q0.x1, cy = p.x2 - q0.x2;
        auto n1_lo = static_cast<std::int64_t>(std::ceil(cx - rho)) - 1;
        auto n1_hi = static_cast<std::int64_t>(std::floor(cx + rho)) + 1;
        for (std::int64_t n1 = n1_lo; n1 <= n1_hi; ++n1) {
            double m2 = rho2 - (n1 - cx) * (n1 - cx);
            if (m2 < 0.0) continue;
            double mr = std::sqrt(m2);
            auto n2_lo = static_cast<std::int64_t>(std::ceil(cy - mr)) - 1;
            auto n2_hi = static_cast<std::int64_t>(std::floor(cy + mr)) + 1;
            for (std::int64_t n2 = n2_lo; n2 <= n2_hi; ++n2) {
                if (++scanned > budget) throw std::runtime_error("ball_count: budget overflow");
                double dx = q0.x1 + n1 - p.x1, dy = q0.x2 + n2 - p.x2;
                double delta =
                    (dx * dx + dy * dy + p.y * p.y + q0.y * q0.y) / (2.0 * p.y * q0.y);
                if (delta > x * (1.0 + 1e-13)) continue;
                GaussInt s(n1, n2);
                kept.insert(GMatrix(m0.a + s * m0.c, m0.b + s * m0.d, m0.c, m0.d));
            }
        }
    };

    // rows modulo +-1 only (the full group is counted, not H-cosets): c in the
    // upper half-lattice, and for c = 0 the units d in {1, i}
    scan_translates(GMatrix::identity());
    scan_translates(GMatrix(GaussInt(0, -1), GaussInt(0), GaussInt(0), GaussInt(0, 1)));

    double y2 = q.y * q.y;
    auto c1_max = static_cast<std::int64_t>(std::floor(std::sqrt(bound / y2))) + 1;
    for (std::int64_t c1 = -c1_max; c1 <= c1_max; ++c1) {
        if (static_cast<double>(c1) * c1 > bound / y2) continue;
        for (std::int64_t c2 = 0; c1 * c1 + c2 * c2 <= bound / y2; ++c2) {
            if (c2 == 0 && c1 <= 0) continue;  // upper half-lattice: c2 > 0, or c2 = 0 and c1 > 0
            GaussInt c(c1, c2);
            double cn = static_cast<double>(c.norm());
            double r2 = bound - cn * y2;
            if (r2 < 0.0) continue;
            double r = std::sqrt(r2);
            double cx = -(c1 * q.x1 - c2 * q.x2);
            double cy = -(c1 * q.x2 + c2 * q.x1);
            auto d1_lo = static_cast<std::int64_t>(std::ceil(cx - r));
            auto d1_hi = static_cast<std::int64_t>(std::floor(cx + r));
            for (std::int64_t d1 = d1_lo; d1 <= d1_hi; ++d1) {
                double m2 = r2 - (d1 - cx) * (d1 - cx);
                if (m2 < 0.0) continue;
                double mr = std::sqrt(m2);
                auto d2_lo = static_cast<std::int64_t>(std::ceil(cy - mr));
                auto d2_hi = static_cast<std::int64_t>(std::floor(cy + mr));
                for (std::int64_t d2 = d2_lo; d2 <= d2_hi; ++d2) {
                    GaussInt d(d1, d2);
                    GMatrix m0;
                    if (!try_complete_row(c, d, m0)) continue;
                    scan_translates(m0);
                }
            }
        }
    }
    return static_cast<std::int64_t>(kept.size());
}

}  // namespace sector
