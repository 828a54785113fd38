#include "gl2/quadrature.hpp"

#include <map>
#include <mutex>
#include <random>

namespace gl2 {

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule r;
    r.x.resize(size_t(n));
    r.w.resize(size_t(n));
    const double eps = 1e-15;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, refined by Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p0 / pp;
            if (std::abs(z - z1) < eps) break;
        }
        r.x[size_t(i)] = -z;
        r.x[size_t(n - 1 - i)] = z;
        r.w[size_t(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[size_t(n - 1 - i)] = r.w[size_t(i)];
    }
    return r;
}

std::mutex g_gauss_mutex;
std::map<int, GaussRule> g_gauss_cache;

// Sobol direction numbers for the first 6 dimensions (Joe-Kuo).
// dim 0 is the van der Corput sequence; for the rest: {s, a, m_1..m_s}.
struct SobolSpec {
    int s;
    unsigned a;
    std::array<unsigned, 4> m;
};
constexpr std::array<SobolSpec, 5> kSobolSpecs = {{
    {1, 0, {1, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0}},
    {3, 1, {1, 3, 1, 0}},
    {3, 2, {1, 1, 1, 0}},
    {4, 1, {1, 1, 3, 3}},
}};

constexpr int kSobolBits = 31;

struct SobolTables {
    // v[d][b]: direction integers scaled to kSobolBits bits
    std::array<std::array<std::uint32_t, kSobolBits>, 6> v{};
    SobolTables() {
        for (int b = 0; b < kSobolBits; ++b) v[0][size_t(b)] = 1u << (kSobolBits - 1 - b);
        for (int d = 1; d < 6; ++d) {
            const SobolSpec& sp = kSobolSpecs[size_t(d - 1)];
            const int s = sp.s;
            std::array<std::uint32_t, kSobolBits> m{};
            for (int i = 0; i < s; ++i) m[size_t(i)] = sp.m[size_t(i)];
            for (int i = s; i < kSobolBits; ++i) {
                std::uint32_t mi = m[size_t(i - s)] ^ (m[size_t(i - s)] << s);
                for (int k = 1; k < s; ++k) {
                    if ((sp.a >> (s - 1 - k)) & 1u) mi ^= m[size_t(i - k)] << k;
                }
                m[size_t(i)] = mi;
            }
            for (int b = 0; b < kSobolBits; ++b)
                v[size_t(d)][size_t(b)] = m[size_t(b)] << (kSobolBits - 1 - b);
        }
    }
};

const SobolTables& sobol_tables() {
    static SobolTables t;
    return t;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    std::lock_guard<std::mutex> lock(g_gauss_mutex);
    auto it = g_gauss_cache.find(n);
    if (it == g_gauss_cache.end()) it = g_gauss_cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

void panel_nodes(double lo, double hi, int order, int panels, std::vector<double>& nodes,
                 std::vector<double>& weights) {
    const GaussRule& gr = gauss_legendre(order);
    nodes.resize(size_t(order) * size_t(panels));
    weights.resize(size_t(order) * size_t(panels));
    const double pw = (hi - lo) / panels;
    size_t idx = 0;
    for (int p = 0; p < panels; ++p) {
        const double c = lo + (p + 0.5) * pw;
        for (int i = 0; i < order; ++i, ++idx) {
            nodes[idx] = c + 0.5 * pw * gr.x[size_t(i)];
            weights[idx] = 0.5 * pw * gr.w[size_t(i)];
        }
    }
}

std::array<std::uint32_t, 6> qmc_digital_shift(std::uint64_t seed, int replicate) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + std::uint64_t(replicate) + 1);
    std::array<std::uint32_t, 6> shift{};
    for (auto& s : shift) s = std::uint32_t(rng() & ((1u << kSobolBits) - 1));
    return shift;
}

void sobol6_points(long n, const std::array<std::uint32_t, 6>& shift,
                   std::vector<std::array<double, 6>>& pts) {
    const SobolTables& tab = sobol_tables();
    pts.resize(size_t(n));
    std::array<std::uint32_t, 6> state{};
    const double scale = 1.0 / double(1u << kSobolBits);
    for (long i = 0; i < n; ++i) {
        for (int d = 0; d < 6; ++d)
            pts[size_t(i)][size_t(d)] = (state[size_t(d)] ^ shift[size_t(d)]) * scale;
        // Gray-code update: flip by the direction number of the lowest zero bit of i.
        unsigned long j = static_cast<unsigned long>(i);
        int c = 0;
        while (j & 1ul) {
            j >>= 1;
            ++c;
        }
        if (c < kSobolBits)
            for (int d = 0; d < 6; ++d) state[size_t(d)] ^= tab.v[size_t(d)][size_t(c)];
    }
}

}  // namespace gl2
