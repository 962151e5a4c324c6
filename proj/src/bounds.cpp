#include "ectarget/bounds.hpp"

#include <cmath>

#include "ectarget/error.hpp"

namespace ectarget {

int ceil_log(std::int64_t value, std::int64_t base) {
    if (value < 1) throw Error("ceil_log needs a positive argument");
    if (base < 2) throw Error("ceil_log needs base >= 2");
    int e = 0;
    BigInt power = 1;
    while (power < value) {
        power *= base;
        ++e;
    }
    return e;
}

std::int64_t ceil_sqrt(std::int64_t value) {
    if (value < 0) throw Error("ceil_sqrt needs a nonnegative argument");
    auto t = static_cast<std::int64_t>(std::sqrt(static_cast<double>(value)));
    while (t > 0 && BigInt(t - 1) * (t - 1) >= value) --t;
    while (BigInt(t) * t < value) ++t;
    return t;
}

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    BigInt out = 1;
    for (std::int64_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

BigInt theorem4_upper(int r, int d, int k) {
    if (r < 1 || d < 1 || k < 2) throw Error("theorem4_upper needs r >= 1, d >= 1, k >= 2");
    BigInt palette = BigInt(8) * d * BigInt(r) * r * r * r;
    BigInt k_power = boost::multiprecision::pow(BigInt(k), d);
    return palette * binomial(palette.convert_to<std::int64_t>(), d) * k_power;
}

RationalPower lemma3_lower(const Graph& g, int k) {
    if (k < 2) throw Error("lemma3_lower needs k >= 2");
    Rational exponent = densest_subgraph(g).value;
    double approx = std::pow(static_cast<double>(k),
                             static_cast<double>(exponent.numerator()) / static_cast<double>(exponent.denominator()));
    return {k, exponent, approx};
}

bool at_least(std::int64_t vertices, const RationalPower& bound) {
    auto p = static_cast<unsigned>(bound.exponent.numerator());
    auto q = static_cast<unsigned>(bound.exponent.denominator());
    return boost::multiprecision::pow(BigInt(vertices), q) >= boost::multiprecision::pow(BigInt(bound.base), p);
}

BoundReport planar_bounds(int k) {
    if (k < 2) throw Error("planar_bounds needs k >= 2");
    constexpr int kPlanarAcyclic = 5;
    constexpr int kPlanarDensity = 3;
    return {boost::multiprecision::pow(BigInt(k), kPlanarDensity),
            theorem4_upper(kPlanarAcyclic, kPlanarDensity, k),
            kPlanarAcyclic,
            kPlanarDensity,
            k,
            "k^3",
            "8*d*r^4*C(8*d*r^4,d)*k^d with r=5, d=3"};
}

GenusDensityBounds genus_density_bounds(std::int64_t g) {
    if (g < 1) throw Error("genus must be at least 1 (use planar bounds for g = 0)");
    const std::int64_t radicand = 3 * g;
    const std::int64_t root = ceil_sqrt(radicand);
    // Exact when 3g is a perfect square.
    double sqrt3g = root * root == radicand ? static_cast<double>(root) : std::sqrt(static_cast<double>(radicand));
    return {radicand, sqrt3g - 0.5, sqrt3g + 3.0, ceil_sqrt(12 * g)};
}

std::int64_t clique_genus(std::int64_t t) {
    if (t < 3) throw Error("clique_genus needs t >= 3");
    std::int64_t num = (t - 3) * (t - 4);
    return (num + 11) / 12;
}

int lemma7_s1_degree(std::int64_t p, int k) {
    if (p < 1 || k < 2) throw Error("lemma7_s1_degree needs p >= 1, k >= 2");
    return ceil_log(p, k);
}

BigInt lemma7_budget(int d, std::int64_t p, int k) {
    if (d < 0 || p < 1 || k < 2) throw Error("lemma7_budget needs d >= 0, p >= 1, k >= 2");
    int m = d <= 1 ? 1 : std::max(1, ceil_log(d, k));
    return BigInt(2 * d + 1) * boost::multiprecision::pow(BigInt(p), m);
}

}  // namespace ectarget
