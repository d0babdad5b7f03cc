#include "adnil/json_io.hpp"

namespace adnil {

using nlohmann::json;

json to_json(const DyckPath& path) {
    return json{{"n", path.half_length()}, {"word", path.word()}};
}

DyckPath dyck_from_json(const json& value) {
    DyckPath path = DyckPath::parse(value.at("word").get<std::string>());
    if (path.half_length() != value.at("n").get<int>()) {
        throw std::invalid_argument("dyck_from_json: n does not match the word length");
    }
    return path;
}

json to_json(const LPartition& lambda) {
    return json{{"l", lambda.rank()}, {"parts", lambda.parts()}};
}

LPartition partition_from_json(const json& value) {
    return LPartition(value.at("l").get<int>(), value.at("parts").get<std::vector<int>>());
}

json to_json(const RootIdeal& ideal) {
    json antichain = json::array();
    const Antichain minimal = ideal.minimal_roots();
    for (const PositiveRoot& root : minimal.roots()) {
        antichain.push_back(json::array({root.start, root.end}));
    }
    return json{{"l", ideal.rank()}, {"antichain", std::move(antichain)}};
}

RootIdeal ideal_from_json(const json& value) {
    const int rank = value.at("l").get<int>();
    std::vector<PositiveRoot> roots;
    for (const auto& entry : value.at("antichain")) {
        roots.push_back({entry.at(0).get<int>(), entry.at(1).get<int>()});
    }
    return RootIdeal::from_antichain(Antichain(std::move(roots)), rank);
}

json to_json(const InsertionTable& table) {
    json rows = json::array();
    json heights = json::array();
    for (int j = 1; j <= table.rows(); ++j) {
        rows.push_back(table.word(j));
        heights.push_back(table.height(j));
    }
    return json{{"l", table.rank},
                {"k", table.profile.count()},
                {"i", table.profile.contacts},
                {"a", std::move(rows)},
                {"h", std::move(heights)}};
}

}  // namespace adnil
