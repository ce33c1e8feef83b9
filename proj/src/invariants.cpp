#include "distset/invariants.hpp"

#include <cmath>
#include <limits>

namespace distset {

unsigned long long binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!r.fits_ulong_p())
        throw Error(ErrorCode::RangeError, "binomial coefficient out of range");
    return r.get_ui();
}

Thresholds threshold_N(std::size_t d, std::size_t s) {
    if (d < 1 || s < 1) throw Error(ErrorCode::RangeError, "need d >= 1 and s >= 1");
    Thresholds t;
    t.n_new = binomial(static_cast<long long>(d + s - 1), static_cast<long long>(s - 1));
    t.n_legacy = t.n_new + binomial(static_cast<long long>(d) + static_cast<long long>(s) - 2,
                                    static_cast<long long>(s) - 2);
    return t;
}

std::vector<QuadExt> k_invariants(const DistanceSpectrum& spec) {
    const std::size_t s = spec.s();
    std::vector<QuadExt> ks;
    if (s < 2) return ks;
    ks.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        QuadExt k(1);
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i) continue;
            k *= spec.sq_distances[j] / (spec.sq_distances[j] - spec.sq_distances[i]);
        }
        ks.push_back(k);
    }
    return ks;
}

QuadExt lrs_k(const DistanceSpectrum& spec) {
    if (spec.s() != 2)
        throw Error(ErrorCode::WrongS, "two-distance invariant needs s = 2, got s = " +
                                            std::to_string(spec.s()));
    const QuadExt& alpha2 = spec.sq_distances[0];
    const QuadExt& beta2 = spec.sq_distances[1];
    return beta2 / (beta2 - alpha2);
}

long k_cap(unsigned long long n) {
    if (n < 2) throw Error(ErrorCode::InvalidN, "cap needs N >= 2");
    const mpz_class nn = mpz_class(static_cast<unsigned long>(n));
    const mpz_class n2 = nn * nn;
    const mpz_class w = 2 * nn - 2;
    mpz_class k = 1;  // 1*0*w = 0 <= N^2 always
    while ((k + 1) * k * w <= n2) ++k;
    if (!k.fits_slong_p()) throw Error(ErrorCode::RangeError, "cap out of range");
    return k.get_si();
}

unsigned long long finiteness_threshold(std::size_t d, std::size_t s) {
    if (d < 1 || s < 1) throw Error(ErrorCode::RangeError, "need d >= 1 and s >= 1");
    return 2 * binomial(static_cast<long long>(d + s - 1), static_cast<long long>(s - 1));
}

InvariantReport analyze(const SquaredDistanceMatrix& dm) {
    if (dm.size() < 2)
        throw Error(ErrorCode::NotDistanceSet, "need at least two points");
    RealizabilityResult real = is_realizable(dm);
    if (!real.realizable)
        throw Error(ErrorCode::NotRealizable,
                    "Gram matrix has " + std::to_string(real.inertia.n_neg) +
                        " negative eigenvalue(s)");

    InvariantReport rep;
    rep.n_points = dm.size();
    rep.d = real.dim;
    rep.spectrum = distance_spectrum(dm);
    rep.s = rep.spectrum.s();
    rep.k_values = k_invariants(rep.spectrum);
    for (const QuadExt& k : rep.k_values) rep.k_integral.push_back(k.is_integer());
    if (rep.s == 2) rep.lrs = lrs_k(rep.spectrum);

    Thresholds t = threshold_N(rep.d, rep.s);
    rep.n_new = t.n_new;
    rep.n_legacy = t.n_legacy;
    rep.threshold_met_new = rep.n_points >= 2 * t.n_new;
    rep.threshold_met_legacy = rep.n_points >= 2 * t.n_legacy;
    rep.finiteness = finiteness_threshold(rep.d, rep.s);
    if (t.n_new >= 2) {
        rep.cap = k_cap(t.n_new);
        const QuadExt capv(static_cast<long>(*rep.cap));
        for (const QuadExt& k : rep.k_values)
            rep.cap_respected.push_back(k.abs() <= capv);
    }
    return rep;
}

InvariantReport analyze(const PointSet& x) { return analyze(sdm_from_points(x)); }

namespace {

// residual of the inverse problem: r_i = prod_{j != i} g_j/(g_j - g_i) - k_i
std::vector<double> residual(const std::vector<double>& g, const std::vector<double>& k) {
    const std::size_t s = k.size();
    std::vector<double> r(s);
    for (std::size_t i = 0; i < s; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < s; ++j) {
            if (j == i) continue;
            p *= g[j] / (g[j] - g[i]);
        }
        r[i] = p - k[i];
    }
    return r;
}

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

// solve the (s-1)x(s-1) system J*h = -r by partial-pivot elimination
bool solve_dense(std::vector<std::vector<double>> j, std::vector<double> rhs,
                 std::vector<double>& h) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(j[r][col]) > std::fabs(j[p][col])) p = r;
        if (std::fabs(j[p][col]) < 1e-300) return false;
        std::swap(j[p], j[col]);
        std::swap(rhs[p], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = j[r][col] / j[col][col];
            for (std::size_t c = col; c < n; ++c) j[r][c] -= f * j[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    h.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double sum = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) sum -= j[i][c] * h[c];
        h[i] = sum / j[i][i];
    }
    return true;
}

bool ordered_interior(const std::vector<double>& g) {
    double prev = 0.0;
    for (double v : g) {
        if (!(v > prev)) return false;
        prev = v;
    }
    return prev < 1.0;
}

}  // namespace

RecoverResult recover_distances(const std::vector<double>& k, double tol) {
    const std::size_t s = k.size();
    if (s < 2) throw Error(ErrorCode::WrongS, "need at least two k values");
    if (!(tol > 0)) throw Error(ErrorCode::RangeError, "tolerance must be positive");
    double sum = 0.0;
    for (double v : k) sum += v;
    if (std::fabs(sum - 1.0) > 1e-6)
        throw Error(ErrorCode::InconsistentK, "sum of k values is " + std::to_string(sum) +
                                                  ", the invariants always sum to 1");

    std::vector<double> g(s - 1);
    for (std::size_t i = 0; i < s - 1; ++i)
        g[i] = static_cast<double>(i + 1) / static_cast<double>(s);

    const int max_iterations = 200;
    auto full = [&](const std::vector<double>& interior) {
        std::vector<double> all = interior;
        all.push_back(1.0);
        return all;
    };

    std::vector<double> r = residual(full(g), k);
    double rn = norm_inf(r);
    int iter = 0;
    for (; iter < max_iterations && rn > tol; ++iter) {
        // analytic Jacobian of r_i (i < s-1 unknowns g_l)
        std::vector<double> ga = full(g);
        std::vector<std::vector<double>> jac(s - 1, std::vector<double>(s - 1, 0.0));
        for (std::size_t i = 0; i < s - 1; ++i) {
            double p = 1.0;
            for (std::size_t j = 0; j < s; ++j) {
                if (j == i) continue;
                p *= ga[j] / (ga[j] - ga[i]);
            }
            for (std::size_t l = 0; l < s - 1; ++l) {
                if (l == i) {
                    double sum_d = 0.0;
                    for (std::size_t j = 0; j < s; ++j)
                        if (j != i) sum_d += 1.0 / (ga[j] - ga[i]);
                    jac[i][l] = p * sum_d;
                } else {
                    jac[i][l] = p * (1.0 / ga[l] - 1.0 / (ga[l] - ga[i]));
                }
            }
        }
        std::vector<double> rhs(s - 1);
        for (std::size_t i = 0; i < s - 1; ++i) rhs[i] = -r[i];
        std::vector<double> h;
        if (!solve_dense(jac, rhs, h))
            throw Error(ErrorCode::NoConvergence, "singular Jacobian in Newton step");

        // damp by halving until the residual actually decreases and the
        // iterate stays strictly ordered inside (0, 1)
        double scale = 1.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings) {
            std::vector<double> cand(s - 1);
            for (std::size_t i = 0; i < s - 1; ++i) cand[i] = g[i] + scale * h[i];
            if (ordered_interior(cand)) {
                std::vector<double> rc = residual(full(cand), k);
                double rcn = norm_inf(rc);
                if (rcn < rn) {
                    g = cand;
                    r = rc;
                    rn = rcn;
                    accepted = true;
                    break;
                }
            }
            scale *= 0.5;
        }
        if (!accepted)
            throw Error(ErrorCode::NoConvergence, "damping failed to reduce the residual");
    }
    if (rn > tol)
        throw Error(ErrorCode::NoConvergence,
                    "residual " + std::to_string(rn) + " after " + std::to_string(iter) +
                        " iterations");
    RecoverResult out;
    out.gamma = full(g);
    out.iterations = iter;
    out.residual = rn;
    return out;
}

}  // namespace distset
