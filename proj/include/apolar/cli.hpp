#pragma once

// Command-line front end.  Subcommands compose the library into
// reproducible runs with byte-stable output.
//
// Exit codes: 0 success, 1 verification failure (nonzero residual or
// deficiency), 2 usage error, 3 resource-cap overflow that dropped
// requested output.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "apolar/apolar.hpp"

namespace apolar {

namespace cli_detail {

inline void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file '" + out_path + "'");
    os << text;
}

inline std::string format_check(const std::string& fmt,
                                std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (fmt == a) return fmt;
    }
    std::string msg = "unknown format '" + fmt + "' (expected";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw UsageError(msg + ")");
}

}  // namespace cli_detail

inline int cli_main(int argc, const char* const* argv) {
    CLI::App app{"apolar ideals of the determinant and permanent: exact Betti "
                 "tables, relation machinery, and verification checks"};
    app.require_subcommand(1);

    std::string kind_s = "det", field_s = "gf:32003", format_s = "table";
    std::string out_path, mu_s, word_s, start_s, relation_s, component_s;
    int n = 2, m = 3, max_degree = 4, max_strand = -2, threads = 0;
    long long level_budget = 2000000, max_steps = 1000000;
    bool no_quartic = false;

    auto add_common = [&](CLI::App* c, bool with_field = true) {
        c->add_option("--kind", kind_s, "det or perm")->capture_default_str();
        c->add_option("--n", n, "matrix size")->required();
        if (with_field) {
            c->add_option("--field", field_s, "qq or gf:<p>")->capture_default_str();
        }
        c->add_option("--out", out_path, "write output to a file");
    };

    auto* betti = app.add_subcommand("betti", "graded Betti table");
    add_common(betti);
    betti->add_option("--format", format_s, "table, json, or csv")
        ->capture_default_str();
    betti->add_option("--max-strand", max_strand,
                      "highest internal degree to compute (-1: all)");
    betti->add_option("--level-budget", level_budget,
                      "max Koszul block size per level")
        ->capture_default_str();
    betti->add_option("--threads", threads, "worker threads (0: auto)");

    auto* formulas = app.add_subcommand("formulas", "closed-form Betti numbers");
    formulas->add_option("--n", n, "matrix size")->required();
    formulas->add_option("--out", out_path, "write output to a file");

    auto* relations = app.add_subcommand(
        "relations", "kernel basis of the degree-2 relation evaluation");
    add_common(relations);
    relations->add_option("--multidegree", mu_s,
                          "row;col weights, e.g. 1,1,1;1,1,1")
        ->required();
    relations->add_option("--format", format_s, "table or json")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "verification checks");
    verify->require_subcommand(1);
    auto* generation = verify->add_subcommand(
        "generation", "canonical orbit generates all relations");
    add_common(generation);
    generation->add_option("--max-degree", max_degree, "check degrees 3..max")
        ->capture_default_str();
    generation->add_flag("--no-quartic", no_quartic,
                         "exclude the degree-4 permanent template");

    auto* cayley = app.add_subcommand("cayley", "transposition Cayley graph tools");
    cayley->require_subcommand(1);
    auto* basis = cayley->add_subcommand("basis", "fundamental zero-magic cycles");
    basis->add_option("--m", m, "symmetric group degree")->required();
    basis->add_option("--out", out_path, "write output to a file");
    auto* reduce = cayley->add_subcommand(
        "reduce", "commutator certificates for a closed word");
    reduce->add_option("--m", m, "symmetric group degree")->required();
    reduce->add_option("--word", word_s, "closed word, e.g. \"(1 2)(3 4)(1 2)(3 4)\"")
        ->required();
    reduce->add_option("--start", start_s,
                       "start permutation as 1-based images (default identity)");
    reduce->add_option("--max-steps", max_steps, "rewrite budget")
        ->capture_default_str();
    reduce->add_option("--out", out_path, "write output to a file");
    auto* exportdot = cayley->add_subcommand("export-dot", "graph in DOT format");
    exportdot->add_option("--m", m, "symmetric group degree (at most 4)")->required();
    exportdot->add_option("--out", out_path, "write output to a file");

    auto* repcheck = app.add_subcommand(
        "repcheck", "weight-refined dimension check over the rationals");
    repcheck->add_option("--component", component_s,
                         "generators, relations, or secondSyzygies")
        ->required();
    repcheck->add_option("--n", n, "matrix size")->required();
    repcheck->add_option("--threads", threads, "worker threads (0: auto)");
    repcheck->add_option("--out", out_path, "write output to a file");

    auto* render = app.add_subcommand(
        "render-relation", "pictorial rendering of a relation");
    add_common(render, false);
    render->add_option("--relation", relation_s,
                       "relation text, e.g. \"X[1,2]*sq(1,1) - X[1,1]*row(1;1,2)\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*betti) {
            PolyKind kind = parse_kind(kind_s);
            FieldSpec spec = FieldSpec::parse(field_s);
            cli_detail::format_check(format_s, {"table", "json", "csv"});
            BettiOptions opt;
            if (max_strand != -2) opt.max_strand = max_strand;
            opt.level_budget = level_budget;
            opt.threads = threads;
            auto table = with_field(spec, [&](auto field) {
                return betti_koszul(field, kind, n, opt);
            });
            std::string text;
            if (format_s == "table") {
                text = to_ascii_table(table);
            } else if (format_s == "json") {
                text = to_json(table) + "\n";
            } else {
                text = to_csv(table);
            }
            cli_detail::emit(text, out_path);
            return table.capped_strands.empty() ? 0 : 3;
        }

        if (*formulas) {
            auto f = betti_closed_forms(n);
            std::string text = "{\"n\":" + std::to_string(n) +
                               ",\"beta12\":" + f.beta12.get_str() +
                               ",\"beta23\":" + f.beta23.get_str() +
                               ",\"detBeta34\":" + f.det_beta34.get_str() +
                               ",\"permBeta24\":" + f.perm_beta24.get_str() +
                               ",\"permBeta34\":" + f.perm_beta34.get_str() + "}\n";
            cli_detail::emit(text, out_path);
            return 0;
        }

        if (*relations) {
            PolyKind kind = parse_kind(kind_s);
            FieldSpec spec = FieldSpec::parse(field_s);
            cli_detail::format_check(format_s, {"table", "json"});
            Multidegree mu = Multidegree::parse(mu_s, n);
            GeneratorSet gens(n);
            auto texts = with_field(spec, [&](auto field) {
                auto rels = relations_multidegree(field, kind, n, mu);
                std::vector<std::string> out;
                for (const auto& r : rels) out.push_back(r.to_string(gens));
                return out;
            });
            std::string text;
            if (format_s == "table") {
                text = "relations " + kind_name(kind) + " n=" + std::to_string(n) +
                       " mu=" + mu.to_string() + " field=" + spec.name() + "\n" +
                       "dim " + std::to_string(texts.size()) + "\n";
                for (std::size_t t = 0; t < texts.size(); ++t) {
                    text += std::to_string(t + 1) + ": " + texts[t] + "\n";
                }
            } else {
                text = "{\"kind\":\"" + kind_name(kind) +
                       "\",\"n\":" + std::to_string(n) + ",\"mu\":\"" + mu.to_string() +
                       "\",\"field\":\"" + spec.name() +
                       "\",\"dim\":" + std::to_string(texts.size()) + ",\"basis\":[";
                for (std::size_t t = 0; t < texts.size(); ++t) {
                    if (t) text += ",";
                    text += "\"" + texts[t] + "\"";
                }
                text += "]}\n";
            }
            cli_detail::emit(text, out_path);
            return 0;
        }

        if (*generation) {
            PolyKind kind = parse_kind(kind_s);
            FieldSpec spec = FieldSpec::parse(field_s);
            auto report = with_field(spec, [&](auto field) {
                return generation_check(field, kind, n, max_degree, !no_quartic);
            });
            std::string text;
            for (const auto& d : report.degrees) {
                text += "degree " + std::to_string(d.degree) + ": relations " +
                        std::to_string(d.relation_dim) + " generated " +
                        std::to_string(d.generated_dim) + " deficiency " +
                        std::to_string(d.deficiency()) + "\n";
            }
            long long deficiency = report.total_deficiency();
            text += "generation " + kind_name(kind) + " n=" + std::to_string(n) +
                    " degrees<=" + std::to_string(max_degree) + " field=" + spec.name() +
                    (no_quartic ? " quartic=off" : " quartic=on") + ": " +
                    (deficiency == 0 ? "PASS" : "FAIL") + " (deficiency " +
                    std::to_string(deficiency) + ")\n";
            cli_detail::emit(text, out_path);
            return deficiency == 0 ? 0 : 1;
        }

        if (*basis) {
            auto g = build_graph(m);
            auto cycles = zero_magic_basis(g);
            std::string text = "m=" + std::to_string(m) + " vertices=" +
                               std::to_string(g.vertex_count) + " edges=" +
                               std::to_string(g.edge_count()) + " circuit_rank=" +
                               std::to_string(g.circuit_rank()) + "\n";
            for (std::size_t c = 0; c < cycles.size(); ++c) {
                text += std::to_string(c + 1) + " ; " +
                        permutation_to_string(cycles[c].cycle.start) + " ; " +
                        cycles[c].cycle.to_string() + "\n";
            }
            cli_detail::emit(text, out_path);
            return 0;
        }

        if (*reduce) {
            ClosedWord w;
            w.word = parse_word(word_s, m);
            w.start = start_s.empty() ? perm_unrank(m, 0) : parse_permutation(start_s, m);
            if (!is_closed(w)) throw UsageError("the given word is not closed");
            auto result = commutator_reduce(w, max_steps);
            std::string text;
            for (const auto& c : result.certificates) text += c.to_string() + "\n";
            cli_detail::emit(text, out_path);
            return 0;
        }

        if (*exportdot) {
            cli_detail::emit(export_dot(build_graph(m)), out_path);
            return 0;
        }

        if (*repcheck) {
            RepComponent component = parse_rep_component(component_s);
            RationalField qq;
            std::map<Multidegree, long long> computed;
            if (component == RepComponent::Generators) {
                GeneratorSet gens(n);
                for (const auto& g : gens.infos) {
                    computed[generator_multidegree(g, n)] += 1;
                }
            } else if (component == RepComponent::Relations) {
                repcheck_detail::for_each_composition(3, n, [&](const std::vector<int>& rw) {
                    repcheck_detail::for_each_composition(
                        3, n, [&](const std::vector<int>& cw) {
                            Multidegree mu(rw, cw);
                            computed[mu] =
                                relation_space_dim(qq, PolyKind::Det, n, mu);
                        });
                });
            } else {
                BettiOptions opt;
                opt.threads = threads;
                computed = betti_refined(qq, PolyKind::Det, n, 3, 4, opt);
            }
            auto report = weight_refined_check(component, n, computed);
            std::string text = "repcheck " + rep_component_name(component) + " n=" +
                               std::to_string(n) + ": " +
                               (report.ok() ? "PASS" : "FAIL") + " (predicted " +
                               std::to_string(report.predicted_total) + ", computed " +
                               std::to_string(report.computed_total) + ")\n" +
                               weight_report_to_json(report) + "\n";
            cli_detail::emit(text, out_path);
            return report.ok() ? 0 : 1;
        }

        if (*render) {
            PolyKind kind = parse_kind(kind_s);
            GeneratorSet gens(n);
            auto rel = parse_relation<RationalField>(relation_s, kind, n);
            cli_detail::emit(render_dots_and_boxes(rel, gens), out_path);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace apolar
