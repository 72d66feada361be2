#pragma once

#include <stdexcept>
#include <vector>

namespace genus {

// Local model of an isolated S^1-fixed point: an orientation sign and the
// nonzero rotation weights of the tangent representation.
struct FixedPointDatum {
    int sign = 1;  // +1 or -1
    std::vector<int> weights;
};

struct FixedPointData {
    int dim = 0;  // even
    std::vector<FixedPointDatum> points;

    void validate() const {
        if (dim <= 0 || dim % 2 != 0)
            throw std::invalid_argument("fixed point data needs positive even dimension");
        for (const FixedPointDatum& p : points) {
            if (p.sign != 1 && p.sign != -1)
                throw std::invalid_argument("fixed point sign must be +1 or -1");
            if (static_cast<int>(p.weights.size()) != dim / 2)
                throw std::invalid_argument("fixed point needs dim/2 rotation weights");
            for (int w : p.weights)
                if (w == 0)
                    throw std::invalid_argument("rotation weights must be nonzero");
        }
    }
};

}  // namespace genus
