#include "gforge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gforge {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path);
    }
    out << text;
}

GroupSpec parse_group_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IoError, std::string("bad group JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
        throw Error(ErrorCode::IoError, "group JSON needs at least 'order' and 'table'");
    }
    auto order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order) {
        throw Error(ErrorCode::IoError, "group JSON: table size differs from 'order'");
    }
    GroupSpec spec;
    spec.group = validate_group(table);
    if (j.contains("name")) {
        spec.group.name = j.at("name").get<std::string>();
    }
    if (j.contains("element_names")) {
        auto names = j.at("element_names").get<std::vector<std::string>>();
        if (static_cast<int>(names.size()) != order) {
            throw Error(ErrorCode::IoError, "group JSON: element_names size differs from 'order'");
        }
        spec.group.element_names = std::move(names);
    }
    if (j.contains("generators")) {
        spec.generators = j.at("generators").get<std::vector<int>>();
    }
    return spec;
}

GroupSpec load_group_file(const std::string& path) {
    return parse_group_json(read_text_file(path));
}

GroupSpec resolve_group_source(const std::string& source) {
    const std::string prefix = "cyclic:";
    if (source.rfind(prefix, 0) == 0) {
        int m = 0;
        try {
            m = std::stoi(source.substr(prefix.size()));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad cyclic order in '" + source + "'");
        }
        GroupSpec spec;
        spec.group = make_cyclic(m);
        for (int v = 0; v < m; ++v) {
            if (v != spec.group.identity) {
                spec.generators.push_back(v);
            }
        }
        return spec;
    }
    return load_group_file(source);
}

std::string graph_to_json(const LabeledGraph& graph) {
    json j;
    auto vertices = json::array();
    for (int v = 0; v < graph.vertex_count(); ++v) {
        vertices.push_back(graph.vertex_name(v));
    }
    auto edges = json::array();
    json labels = json::object();
    for (int u = 0; u < graph.vertex_count(); ++u) {
        for (const auto& e : graph.neighbors(u)) {
            labels[std::to_string(u) + "->" + std::to_string(e.to)] = to_token(graph.alphabet().at(e.letter));
            if (e.to > u) {
                edges.push_back(json::array({u, e.to}));
            }
        }
    }
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    j["labels"] = std::move(labels);
    return j.dump(2) + "\n";
}

namespace {

json system_body(const RewritingSystem& sys, const std::vector<RuleProvenance>* provenance) {
    json j;
    auto alphabet = json::array();
    json involution = json::object();
    for (std::size_t i = 0; i < sys.alphabet().size(); ++i) {
        std::string token = to_token(sys.alphabet().at(static_cast<int>(i)));
        alphabet.push_back(token);
        int inv = sys.alphabet().inverse(static_cast<int>(i));
        if (inv >= 0) {
            involution[token] = to_token(sys.alphabet().at(inv));
        }
    }
    j["alphabet"] = std::move(alphabet);
    j["involution"] = std::move(involution);
    auto rules = json::array();
    for (std::size_t r = 0; r < sys.rule_count(); ++r) {
        json rule;
        rule["lhs"] = to_string(sys.rules()[r].lhs);
        rule["rhs"] = to_string(sys.rules()[r].rhs);
        if (provenance != nullptr) {
            rule["type"] = rule_origin_tag((*provenance)[r].origin);
            rule["circuit"] = (*provenance)[r].circuit;
        }
        rules.push_back(std::move(rule));
    }
    j["rules"] = std::move(rules);
    j["length_reducing"] = is_length_reducing(sys).length_reducing;
    return j;
}

} // namespace

std::string system_to_json(const SubdivisionSystem& sys) {
    json j = system_body(sys.system, &sys.provenance);
    j["n"] = sys.n;
    auto order = json::array();
    std::vector<int> by_rank(sys.order.rank.size());
    for (std::size_t id = 0; id < sys.order.rank.size(); ++id) {
        by_rank[static_cast<std::size_t>(sys.order.rank[id])] = static_cast<int>(id);
    }
    for (int id : by_rank) {
        order.push_back(to_token(sys.graph.alphabet().at(id)));
    }
    j["order"] = std::move(order);
    json group;
    group["name"] = sys.group.name.empty() ? "order-" + std::to_string(sys.group.order) : sys.group.name;
    group["order"] = sys.group.order;
    group["generators"] = sys.gens.elements;
    j["group"] = std::move(group);
    return j.dump(2) + "\n";
}

std::string system_to_json(const RewritingSystem& sys) {
    return system_body(sys, nullptr).dump(2) + "\n";
}

RewritingSystem system_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IoError, std::string("bad system JSON: ") + e.what());
    }
    std::vector<Letter> letters;
    for (const auto& token : j.at("alphabet")) {
        letters.push_back(letter_from_token(token.get<std::string>()));
    }
    Alphabet alphabet(std::move(letters));
    if (j.contains("involution")) {
        for (auto it = j.at("involution").begin(); it != j.at("involution").end(); ++it) {
            alphabet.set_inverse(alphabet.id(letter_from_token(it.key())),
                                 alphabet.id(letter_from_token(it.value().get<std::string>())));
        }
    }
    std::vector<Rule> rules;
    for (const auto& rule : j.at("rules")) {
        rules.push_back(Rule{word_from_string(rule.at("lhs").get<std::string>()),
                             word_from_string(rule.at("rhs").get<std::string>())});
    }
    return RewritingSystem(std::move(alphabet), std::move(rules));
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    json j;
    bool all = true;
    auto items = json::array();
    for (const auto& r : reports) {
        json item;
        item["check"] = r.check;
        item["inputs"] = r.inputs;
        item["pass"] = r.pass;
        item["details"] = r.details;
        item["millis"] = r.millis;
        items.push_back(std::move(item));
        all = all && r.pass;
    }
    j["pass"] = all;
    j["reports"] = std::move(items);
    return j.dump(2) + "\n";
}

} // namespace gforge
