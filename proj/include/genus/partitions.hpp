#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace genus {

// Partition of a natural number: weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

// All partitions of k, lexicographically decreasing ([k], ..., [1,...,1]).
inline std::vector<Partition> partitions_of(int k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    Partition cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// Comma-joined parts, e.g. "2" or "1,1".
inline std::string format_partition(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out;
}

inline Partition parse_partition(const std::string& s) {
    Partition p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        try {
            p.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part: '" + tok + "'");
        }
        pos = next + 1;
    }
    std::sort(p.rbegin(), p.rend());
    if (!is_valid_partition(p))
        throw std::invalid_argument("not a partition: '" + s + "'");
    return p;
}

// Merge of part multisets (product of e-monomials).
inline Partition partition_merge(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    std::sort(r.rbegin(), r.rend());
    return r;
}

}  // namespace genus
