#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coronaspec {

/// Both real roots of a x^2 + b x + c, ascending. A discriminant within
/// 1e-12 below zero is clamped to a double root; anything more negative is
/// an error. Cancellation-safe: the root far from zero comes from the
/// stable branch of the quadratic formula, the other from c / (a * q).
inline std::array<double, 2> real_roots_quadratic(double a, double b, double c) {
    if (a == 0.0)
        throw std::invalid_argument("real_roots_quadratic: leading coefficient is zero");
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        if (disc < -1e-12)
            throw std::domain_error("real_roots_quadratic: negative discriminant, roots are complex");
        const double root = -0.5 * b / a;  // clamped to an exact double root
        return {root, root};
    }
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    std::array<double, 2> roots{};
    if (q == 0.0) {
        // b and disc both vanish, hence c does too: double root at zero.
        roots = {0.0, 0.0};
    } else {
        roots = {q / a, c / q};
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// All three real roots of a x^3 + b x^2 + c x + d, ascending, via the
/// trigonometric form of Cardano's method plus one Newton step per root.
/// Throws when the polynomial has a genuinely complex pair (beyond a 1e-9
/// tolerance on the normalized acos argument). Scale-invariant: the
/// coefficients are normalized to a monic cubic first.
inline std::array<double, 3> real_roots_cubic(double a, double b, double c, double d) {
    if (a == 0.0)
        throw std::invalid_argument("real_roots_cubic: leading coefficient is zero");
    const double a2 = b / a;
    const double a1 = c / a;
    const double a0 = d / a;

    // Depressed form y^3 + p y + q with x = y - a2/3.
    const double shift = a2 / 3.0;
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

    std::array<double, 3> roots{};
    if (p < 0.0) {
        const double mag = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * mag);
        if (std::abs(arg) > 1.0 + 1e-9)
            throw std::domain_error("real_roots_cubic: complex root pair, not all roots are real");
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
        for (int i = 0; i < 3; ++i) roots[static_cast<std::size_t>(i)] = mag * std::cos(phi - third_turn * i) - shift;
    } else {
        // p >= 0 admits three real roots only when they collapse to a
        // triple root, i.e. both depressed coefficients are ~0.
        const double scale = std::max({1.0, std::abs(a2), std::sqrt(std::abs(a1)),
                                       std::cbrt(std::abs(a0))});
        if (p > 1e-9 * scale * scale || std::abs(q) > 1e-9 * scale * scale * scale)
            throw std::domain_error("real_roots_cubic: complex root pair, not all roots are real");
        roots.fill(std::cbrt(-q) - shift);
    }

    // One Newton step on the monic cubic recovers the ~2 digits the
    // trigonometric form loses near repeated roots. Oversized steps (flat
    // derivative at a repeated root) are skipped.
    for (double& x : roots) {
        const double f = ((x + a2) * x + a1) * x + a0;
        const double df = (3.0 * x + 2.0 * a2) * x + a1;
        if (df != 0.0) {
            const double step = f / df;
            if (std::abs(step) < 0.5 * (1.0 + std::abs(x))) x -= step;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace coronaspec
