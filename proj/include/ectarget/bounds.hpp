#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ectarget/density_orient.hpp"
#include "ectarget/graph.hpp"

namespace ectarget {

using BigInt = boost::multiprecision::cpp_int;

// Smallest e >= 0 with base^e >= value, by exact integer comparison.
int ceil_log(std::int64_t value, std::int64_t base);
// Smallest t >= 0 with t^2 >= value.
std::int64_t ceil_sqrt(std::int64_t value);

BigInt binomial(std::int64_t n, std::int64_t r);

// 8dr^4 * C(8dr^4, d) * k^d.
BigInt theorem4_upper(int r, int d, int k);

// k raised to a rational exponent, kept exact as (base, exponent).
struct RationalPower {
    int base;
    Rational exponent;
    double approx;
};

RationalPower lemma3_lower(const Graph& g, int k);

// True when vertices >= base^exponent, compared exactly as
// vertices^q >= base^p for exponent p/q.
bool at_least(std::int64_t vertices, const RationalPower& bound);

struct BoundReport {
    BigInt lower;
    BigInt upper;
    int r;
    int d;
    int k;
    std::string lower_formula;
    std::string upper_formula;
};

// lower = k^3 (planar density 3), upper = theorem4_upper(5, 3, k) (acyclic
// chromatic number 5, Hakimi 3-orientation).
BoundReport planar_bounds(int k);

struct GenusDensityBounds {
    // sqrt(3g) - 1/2 and sqrt(3g) + 3; radicand kept for the exact form.
    std::int64_t radicand;
    double lower;
    double upper;
    // ceil(sqrt(12g)), the clique size attaining the lower bound.
    std::int64_t t;
};

GenusDensityBounds genus_density_bounds(std::int64_t g);

// ceil((t-3)(t-4)/12).
std::int64_t clique_genus(std::int64_t t);

// ceil(log_k p): in-degree bound implied by a universal target on p vertices.
int lemma7_s1_degree(std::int64_t p, int k);

// (2d+1) * p^max(1, ceil(log_k d)).
BigInt lemma7_budget(int d, std::int64_t p, int k);

}  // namespace ectarget
