#include "haarent/kernels.hpp"

#include <cmath>
#include <limits>

#include "haarent/error.hpp"

namespace haarent::kernels {

void evaluate(const std::function<double(double)>& f, std::span<const double> xs,
              std::span<double> out, Execution exec) {
    if (xs.size() != out.size()) throw DomainError("evaluate: size mismatch");
    auto values = map_indices(xs.size(), [&](std::size_t i) { return f(xs[i]); }, exec);
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
}

Extrema extrema(std::span<const double> values) {
    Extrema e;
    e.min = std::numeric_limits<double>::infinity();
    e.max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        if (std::isnan(v)) continue;
        if (v < e.min) {
            e.min = v;
            e.argmin = i;
        }
        if (v > e.max) {
            e.max = v;
            e.argmax = i;
        }
    }
    return e;
}

double ordered_sum(std::span<const double> values) {
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

}  // namespace haarent::kernels
