#include "qcollide/numerics.hpp"

#include <cmath>
#include <cstddef>

#include "qcollide/errors.hpp"

namespace qcollide {

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw user_error("slope fit needs matching samples, at least two");
    const size_t n = x.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw user_error("slope fit needs strictly positive samples");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    return (n * sxy - sx * sy) / denom;
}

double romberg(const std::function<double(double)>& f, double a, double b, double tol,
               int max_level) {
    std::vector<double> row{0.5 * (b - a) * (f(a) + f(b))};
    double h = b - a;
    long intervals = 1;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        intervals *= 2;
        double sum = 0.0;
        for (long k = 1; k < intervals; k += 2) sum += f(a + k * h);
        std::vector<double> next(static_cast<size_t>(level) + 1);
        next[0] = 0.5 * row[0] + h * sum;
        double pow4 = 1.0;
        for (int j = 1; j <= level; ++j) {
            pow4 *= 4.0;
            next[static_cast<size_t>(j)] =
                next[static_cast<size_t>(j - 1)] +
                (next[static_cast<size_t>(j - 1)] - row[static_cast<size_t>(j - 1)]) /
                    (pow4 - 1.0);
        }
        const double est = next.back();
        const double prev = row.back();
        row = std::move(next);
        if (level >= 4 && std::abs(est - prev) <= tol * std::max(1.0, std::abs(est)))
            return est;
    }
    return row.back();
}

}  // namespace qcollide
