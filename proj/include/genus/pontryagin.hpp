#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "genus/partitions.hpp"
#include "genus/rational.hpp"

namespace genus {

// Pontryagin numbers of a closed oriented 4k-manifold: dim = 4k and a
// map from partitions of k to the numbers p_pi[M].
struct PontryaginData {
    int dim = 0;
    std::map<Partition, Rational> numbers;

    int k() const { return dim / 4; }

    void validate() const {
        if (dim <= 0 || dim % 4 != 0)
            throw std::invalid_argument("Pontryagin data needs dim divisible by 4");
        for (const auto& [pi, val] : numbers) {
            (void)val;
            if (!is_valid_partition(pi) || partition_weight(pi) != dim / 4)
                throw std::invalid_argument("Pontryagin number key '" + format_partition(pi) +
                                            "' is not a partition of dim/4");
        }
    }

    Rational number(const Partition& pi) const {
        auto it = numbers.find(pi);
        return it == numbers.end() ? Rational(0) : it->second;
    }
};

// Characteristic numbers of a connected sum: positive-degree classes split.
inline PontryaginData connected_sum_pontryagin(const PontryaginData& a,
                                               const PontryaginData& b) {
    a.validate();
    b.validate();
    if (a.dim != b.dim)
        throw std::invalid_argument("connected sum of manifolds of different dimensions");
    PontryaginData r;
    r.dim = a.dim;
    r.numbers = a.numbers;
    for (const auto& [pi, val] : b.numbers) r.numbers[pi] += val;
    for (auto it = r.numbers.begin(); it != r.numbers.end();)
        it = it->second == 0 ? r.numbers.erase(it) : std::next(it);
    return r;
}

namespace detail {

// Multivariate polynomial over Rational with per-variable exponent caps
// (h_i^(cap_i + 1) = 0); just enough for projective-space products.
struct CappedPoly {
    std::vector<int> caps;
    std::map<std::vector<int>, Rational> terms;

    static CappedPoly one(std::vector<int> caps) {
        CappedPoly p{std::move(caps), {}};
        p.terms[std::vector<int>(p.caps.size(), 0)] = 1;
        return p;
    }

    CappedPoly mul(const CappedPoly& other) const {
        CappedPoly r{caps, {}};
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : other.terms) {
                std::vector<int> e(caps.size());
                bool keep = true;
                for (size_t i = 0; i < caps.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                    if (e[i] > caps[i]) {
                        keep = false;
                        break;
                    }
                }
                if (!keep) continue;
                Rational& slot = r.terms[e];
                slot += ca * cb;
                if (slot == 0) r.terms.erase(e);
            }
        return r;
    }

    // part of total degree d
    CappedPoly graded_part(int d) const {
        CappedPoly r{caps, {}};
        for (const auto& [e, c] : terms) {
            int deg = 0;
            for (int x : e) deg += x;
            if (deg == d) r.terms[e] = c;
        }
        return r;
    }
};

}  // namespace detail

// Pontryagin numbers of CP^{n_1} x ... x CP^{n_r}, from the total class
// prod_i (1 + h_i^2)^(n_i + 1) with h_i^(n_i + 1) = 0, evaluated against
// h_1^{n_1} ... h_r^{n_r}.
inline PontryaginData pontryagin_of_projective_product(const std::vector<int>& ns) {
    int dim = 0;
    std::vector<int> caps;
    for (int n : ns) {
        if (n <= 0) throw std::invalid_argument("projective factor CP^n needs n >= 1");
        dim += 2 * n;
        caps.push_back(n);
    }
    if (dim % 4 != 0)
        throw std::invalid_argument("product dimension not divisible by 4");
    int k = dim / 4;

    detail::CappedPoly total = detail::CappedPoly::one(caps);
    for (size_t i = 0; i < ns.size(); ++i) {
        detail::CappedPoly base{caps, {}};  // 1 + h_i^2
        base.terms[std::vector<int>(caps.size(), 0)] = 1;
        if (caps[i] >= 2) {
            std::vector<int> e(caps.size(), 0);
            e[i] = 2;
            base.terms[e] = 1;
        }
        for (int rep = 0; rep < ns[i] + 1; ++rep) total = total.mul(base);
    }

    std::vector<detail::CappedPoly> p(k + 1);  // p[j] in cohomology degree 4j
    for (int j = 1; j <= k; ++j) p[j] = total.graded_part(2 * j);

    std::vector<int> fundamental(ns.begin(), ns.end());
    PontryaginData out;
    out.dim = dim;
    for (const Partition& pi : partitions_of(k)) {
        detail::CappedPoly prod = detail::CappedPoly::one(caps);
        for (int part : pi) prod = prod.mul(p[part]);
        auto it = prod.terms.find(fundamental);
        if (it != prod.terms.end() && it->second != 0) out.numbers[pi] = it->second;
    }
    return out;
}

}  // namespace genus
