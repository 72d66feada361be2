#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "genus/fixed_points.hpp"
#include "genus/partitions.hpp"
#include "genus/pontryagin.hpp"
#include "genus/rational.hpp"

namespace genus {

// Wire format:
//   {"dim": <even int>, "points": [{"sign": 1|-1, "weights": [<ints>]}, ...]}
inline nlohmann::json to_json(const FixedPointData& d) {
    nlohmann::json pts = nlohmann::json::array();
    for (const FixedPointDatum& p : d.points)
        pts.push_back({{"sign", p.sign}, {"weights", p.weights}});
    return {{"dim", d.dim}, {"points", pts}};
}

inline FixedPointData fixed_point_data_from_json(const nlohmann::json& j) {
    FixedPointData d;
    d.dim = j.at("dim").get<int>();
    for (const auto& jp : j.at("points")) {
        FixedPointDatum p;
        p.sign = jp.at("sign").get<int>();
        p.weights = jp.at("weights").get<std::vector<int>>();
        d.points.push_back(std::move(p));
    }
    d.validate();
    return d;
}

// Wire format:
//   {"dim": <int divisible by 4>,
//    "numbers": {"<partition, e.g. '2' or '1,1'>": "<rational 'p/q'>", ...}}
inline nlohmann::json to_json(const PontryaginData& d) {
    nlohmann::json nums = nlohmann::json::object();
    for (const auto& [pi, val] : d.numbers)
        nums[format_partition(pi)] = format_rational(val);
    return {{"dim", d.dim}, {"numbers", nums}};
}

inline PontryaginData pontryagin_data_from_json(const nlohmann::json& j) {
    PontryaginData d;
    d.dim = j.at("dim").get<int>();
    for (const auto& [key, val] : j.at("numbers").items())
        d.numbers[parse_partition(key)] = parse_rational(val.get<std::string>());
    d.validate();
    return d;
}

}  // namespace genus
