#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gforge/io.hpp"
#include "gforge/subdivision_system.hpp"
#include "gforge/verify.hpp"

namespace {

using namespace gforge;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNonGeodetic = 2;
constexpr int kExitCheckFailed = 3;

struct GroupArgs {
    std::string source;
    std::string gens;
};

void add_group_options(CLI::App* cmd, GroupArgs& args, const char* name = "group") {
    cmd->add_option(name, args.source, "group source: JSON file or cyclic:<m>")->required();
    cmd->add_option("--gens", args.gens, "comma-separated generator element indices");
}

// Generator tokens are element indices, or element names when the group
// carries them.
std::vector<int> parse_generators(const std::string& text, const FiniteGroup& group) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used == item.size()) {
                out.push_back(value);
                continue;
            }
        } catch (const std::exception&) {
        }
        bool found = false;
        for (int v = 0; v < group.order && !found; ++v) {
            if (group.element_name(v) == item) {
                out.push_back(v);
                found = true;
            }
        }
        if (!found) {
            throw Error(ErrorCode::InvalidArgument, "unknown generator '" + item + "'");
        }
    }
    return out;
}

std::pair<FiniteGroup, GenSet> resolve(const GroupArgs& args) {
    GroupSpec spec = resolve_group_source(args.source);
    std::vector<int> gens = args.gens.empty() ? spec.generators : parse_generators(args.gens, spec.group);
    if (gens.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no generators given (use --gens)");
    }
    return {spec.group, check_genset(spec.group, gens)};
}

FiniteGroup parse_probe(const std::string& token) {
    if (token == "s3") {
        return make_symmetric3();
    }
    if (token == "v4" || token == "klein4") {
        return make_klein_four();
    }
    if (token.size() > 1 && token[0] == 'c') {
        return make_cyclic(std::stoi(token.substr(1)));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown probe '" + token + "' (use c<m>, s3 or klein4)");
}

RewritingSystem load_system(const std::string& system_path, const std::string& rules_path) {
    if (!system_path.empty()) {
        return system_from_json(read_text_file(system_path));
    }
    if (!rules_path.empty()) {
        return system_from_rules_text(read_text_file(rules_path));
    }
    throw Error(ErrorCode::InvalidArgument, "need --system or --rules");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_text_file(path, text);
    }
}

int finish_reports(const std::vector<VerificationReport>& reports, const std::string& report_path) {
    bool all = true;
    for (const auto& r : reports) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.check << ": " << r.details << "\n";
        all = all && r.pass;
    }
    if (!report_path.empty()) {
        write_text_file(report_path, reports_to_json(reports));
    }
    return all ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subdivision rewriting systems over geodetic Cayley graphs"};
    app.require_subcommand(1);

    std::string caps_json;
    app.add_option("--caps", caps_json, "JSON object overriding resource caps");
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (default: hardware)");
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps");

    // check-geodetic
    auto* check_cmd = app.add_subcommand("check-geodetic", "decide geodeticity of a Cayley graph");
    GroupArgs check_args;
    add_group_options(check_cmd, check_args);
    int check_n = 0;
    check_cmd->add_option("-n", check_n, "also subdivide n times before checking");

    // nabla
    auto* nabla_cmd = app.add_subcommand("nabla", "build the subdivision rewriting system");
    GroupArgs nabla_args;
    add_group_options(nabla_cmd, nabla_args);
    int nabla_n = 0;
    nabla_cmd->add_option("-n", nabla_n, "subdivision depth")->required();
    std::string nabla_out;
    nabla_cmd->add_option("-o,--output", nabla_out, "output JSON path (default stdout)");
    std::string nabla_dot;
    nabla_cmd->add_option("--dot", nabla_dot, "also write the subdivided graph as DOT");
    std::string nabla_order = "canonical";
    nabla_cmd->add_option("--order", nabla_order, "letter order: canonical|reversed")
        ->check(CLI::IsMember({"canonical", "reversed"}));

    // subdivide
    auto* subdivide_cmd = app.add_subcommand("subdivide", "write the subdivided labelled Cayley graph");
    GroupArgs subdivide_args;
    add_group_options(subdivide_cmd, subdivide_args);
    int subdivide_n = 0;
    subdivide_cmd->add_option("-n", subdivide_n, "subdivision depth")->required();
    std::string subdivide_out;
    subdivide_cmd->add_option("-o,--output", subdivide_out, "output JSON path (default stdout)");
    std::string subdivide_dot;
    subdivide_cmd->add_option("--dot", subdivide_dot, "also write DOT");

    // rewrite
    auto* rewrite_cmd = app.add_subcommand("rewrite", "reduce a word to its normal form");
    std::string rewrite_system;
    std::string rewrite_rules;
    rewrite_cmd->add_option("--system", rewrite_system, "system JSON path");
    rewrite_cmd->add_option("--rules", rewrite_rules, "plain rules file path");
    std::vector<std::string> rewrite_tokens;
    rewrite_cmd->add_option("word", rewrite_tokens, "letter tokens (or _ for the empty word)");

    // confluence
    auto* confluence_cmd = app.add_subcommand("confluence", "bounded strategy-comparison confluence check");
    std::string confluence_system;
    std::string confluence_rules;
    confluence_cmd->add_option("--system", confluence_system, "system JSON path");
    confluence_cmd->add_option("--rules", confluence_rules, "plain rules file path");
    int confluence_len = 6;
    confluence_cmd->add_option("--max-len", confluence_len, "sweep all words up to this length");

    // growth
    auto* growth_cmd = app.add_subcommand("growth", "irreducible-word census by length");
    std::string growth_system;
    std::string growth_rules;
    growth_cmd->add_option("--system", growth_system, "system JSON path");
    growth_cmd->add_option("--rules", growth_rules, "plain rules file path");
    int growth_len = 6;
    growth_cmd->add_option("-L,--length", growth_len, "maximum word length");

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz DOT of the (optionally subdivided) Cayley graph");
    GroupArgs dot_args;
    add_group_options(dot_cmd, dot_args);
    int dot_n = 0;
    dot_cmd->add_option("-n", dot_n, "subdivision depth (default 0: base graph)");
    std::string dot_out;
    dot_cmd->add_option("-o,--output", dot_out, "output path (default stdout)");

    // verify family
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the structural theorems");
    verify_cmd->require_subcommand(1);
    std::string report_path;
    verify_cmd->add_option("--report", report_path, "write the JSON report here");

    auto* va = verify_cmd->add_subcommand("theorem-a", "free-product presentation probes");
    GroupArgs va_args;
    add_group_options(va, va_args);
    int va_n = 0;
    va->add_option("-n", va_n, "subdivision depth")->required();
    std::string va_probes = "c2,c3,s3";
    va->add_option("--probes", va_probes, "comma-separated probe groups (c<m>, s3, klein4)");

    auto* vb = verify_cmd->add_subcommand("theorem-b", "geodeticity equivalence");
    GroupArgs vb_args;
    add_group_options(vb, vb_args);
    int vb_n = 0;
    vb->add_option("-n", vb_n, "subdivision depth")->required();

    auto* vi = verify_cmd->add_subcommand("iterated", "iterated vs single-step subdivision");
    GroupArgs vi_args;
    add_group_options(vi, vi_args);
    int vi_n = 0;
    int vi_m = 0;
    vi->add_option("-n", vi_n, "outer subdivision depth")->required();
    vi->add_option("-m", vi_m, "inner subdivision depth")->required();

    auto* vc = verify_cmd->add_subcommand("compose", "free-product composition law");
    GroupArgs vc_args;
    add_group_options(vc, vc_args);
    std::string vc_source2;
    std::string vc_gens2;
    vc->add_option("--group2", vc_source2, "second factor: JSON file or cyclic:<m>")->required();
    vc->add_option("--gens2", vc_gens2, "second factor generators");
    int vc_n = 0;
    vc->add_option("-n", vc_n, "subdivision depth")->required();
    int vc_radius = 6;
    vc->add_option("-R,--radius", vc_radius, "ball radius");

    auto* vr = verify_cmd->add_subcommand("correspondence", "irreducible words vs Cayley-ball spheres");
    GroupArgs vr_args;
    add_group_options(vr, vr_args);
    int vr_n = 0;
    vr->add_option("-n", vr_n, "subdivision depth")->required();
    int vr_radius = 6;
    vr->add_option("-R,--radius", vr_radius, "maximum radius");

    CLI11_PARSE(app, argc, argv);

    try {
        Caps caps = Caps::from_env();
        if (!caps_json.empty()) {
            caps.apply_json(caps_json);
        }

        if (*check_cmd) {
            auto [group, gens] = resolve(check_args);
            LabeledGraph graph = cayley_graph(group, gens);
            if (check_n > 0) {
                graph = subdivide(graph, check_n).graph;
            }
            GeodeticResult r = is_geodetic(graph);
            if (r.geodetic) {
                std::cout << "geodetic\n";
                return kExitOk;
            }
            std::cout << "non-geodetic\n";
            const auto& w = *r.witness;
            std::cout << "witness: u=" << graph.vertex_name(w.u) << " v=" << graph.vertex_name(w.v) << "\n";
            auto print_path = [&](const char* tag, const std::vector<int>& path) {
                std::cout << tag;
                for (int v : path) {
                    std::cout << " " << graph.vertex_name(v);
                }
                std::cout << "\n";
            };
            print_path("path1:", w.path1);
            print_path("path2:", w.path2);
            return kExitNonGeodetic;
        }

        if (*nabla_cmd) {
            auto [group, gens] = resolve(nabla_args);
            OrderKind order = nabla_order == "reversed" ? OrderKind::Reversed : OrderKind::Canonical;
            SubdivisionSystem sys = build_subdivision_system(group, gens, nabla_n, order, caps);
            emit(system_to_json(sys), nabla_out);
            if (!nabla_dot.empty()) {
                write_text_file(nabla_dot, export_dot(sys.graph));
            }
            return kExitOk;
        }

        if (*subdivide_cmd) {
            auto [group, gens] = resolve(subdivide_args);
            Subdivision sub = subdivide(cayley_graph(group, gens), subdivide_n);
            emit(graph_to_json(sub.graph), subdivide_out);
            if (!subdivide_dot.empty()) {
                write_text_file(subdivide_dot, export_dot(sub.graph));
            }
            return kExitOk;
        }

        if (*rewrite_cmd) {
            RewritingSystem sys = load_system(rewrite_system, rewrite_rules);
            std::string joined;
            for (const auto& t : rewrite_tokens) {
                joined += t;
                joined += ' ';
            }
            Word w = word_from_string(joined);
            std::int64_t steps = 0;
            std::vector<int> nf = normal_form_ids(sys.compile(w), sys, Strategy::Leftmost, caps.step_cap, seed, &steps);
            std::cout << to_string(sys.decompile(nf)) << "\n";
            std::cout << "steps: " << steps << "\n";
            return kExitOk;
        }

        if (*confluence_cmd) {
            RewritingSystem sys = load_system(confluence_system, confluence_rules);
            ConfluenceResult r = check_confluence_bounded(sys, confluence_len, seed, threads, caps.step_cap);
            if (r.confluent) {
                std::cout << "confluent up to length " << r.checked_up_to << "\n";
                return kExitOk;
            }
            std::cout << "not confluent: " << to_string(*r.counterexample) << " reduces to "
                      << to_string(r.divergent_forms[0]) << " and " << to_string(r.divergent_forms[1]) << "\n";
            return kExitCheckFailed;
        }

        if (*growth_cmd) {
            RewritingSystem sys = load_system(growth_system, growth_rules);
            CensusResult census = irreducible_words(sys, growth_len, false, caps);
            for (std::size_t r = 0; r < census.counts.size(); ++r) {
                std::cout << r << " " << census.counts[r] << "\n";
            }
            return kExitOk;
        }

        if (*dot_cmd) {
            auto [group, gens] = resolve(dot_args);
            LabeledGraph graph = cayley_graph(group, gens);
            if (dot_n > 0) {
                graph = subdivide(graph, dot_n).graph;
            }
            emit(export_dot(graph), dot_out);
            return kExitOk;
        }

        if (*verify_cmd) {
            std::vector<VerificationReport> reports;
            if (*va) {
                auto [group, gens] = resolve(va_args);
                std::vector<FiniteGroup> probes;
                std::stringstream in(va_probes);
                std::string token;
                while (std::getline(in, token, ',')) {
                    if (!token.empty()) {
                        probes.push_back(parse_probe(token));
                    }
                }
                reports.push_back(verify_free_product_presentation(group, gens, va_n, probes, caps));
            } else if (*vb) {
                auto [group, gens] = resolve(vb_args);
                reports.push_back(verify_geodetic_equivalence(group, gens, vb_n, caps));
            } else if (*vi) {
                auto [group, gens] = resolve(vi_args);
                reports.push_back(verify_iterated_subdivision(group, gens, vi_n, vi_m, caps));
            } else if (*vc) {
                auto [group, gens] = resolve(vc_args);
                auto [group2, gens2] = resolve(GroupArgs{vc_source2, vc_gens2});
                reports.push_back(
                    verify_free_product_composition(group, gens, group2, gens2, vc_n, vc_radius, caps, threads));
            } else if (*vr) {
                auto [group, gens] = resolve(vr_args);
                SubdivisionSystem sys = build_subdivision_system(group, gens, vr_n, OrderKind::Canonical, caps);
                reports.push_back(verify_cayley_correspondence(sys.system, vr_radius, caps));
            }
            return finish_reports(reports, report_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
