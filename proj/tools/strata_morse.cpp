#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strata/json_io.hpp"
#include "strata/perversity.hpp"

namespace {

using namespace strata;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json gap_to_json(double g) { return std::isinf(g) ? json(nullptr) : json(g); }

std::string gap_to_text(double g) { return std::isinf(g) ? "inf" : fmt(g); }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw input_error("cannot write output file '" + out_path + "'");
    out << text;
}

std::optional<bool> try_self_dual(const SpacePtr& s) {
    try {
        return all_nodes_self_dual(*s);
    } catch (const math_error&) {
        return std::nullopt;  // no star structure available to decide
    }
}

int cmd_cohomology(const ProblemFile& file, OutputFormat format, const std::string& out_path) {
    const SpacePtr space = file.cohomology;
    GradedBasis coh = global_cohomology(*space);
    GradedPoly p = coh.poly();
    const bool witt = witt_check(*space);
    const std::optional<bool> self_dual = try_self_dual(space);

    std::ostringstream text;
    if (format == OutputFormat::Json) {
        json out{{"space", to_json(space)},
                 {"poincare", to_json(p)},
                 {"euler", eval_minus_one(p)},
                 {"witt", witt},
                 {"self_dual", self_dual ? json(*self_dual) : json(nullptr)},
                 {"classes", json::array()}};
        for (const GradedClass& c : coh.classes)
            out["classes"].push_back({{"degree", c.degree}, {"label", c.label}});
        text << out.dump(2) << "\n";
    } else {
        text << "poincare polynomial: " << p.to_string() << "\n";
        text << "euler characteristic: " << eval_minus_one(p) << "\n";
        text << "witt condition: " << (witt ? "satisfied" : "violated") << "\n";
        text << "self-dual perversity: " << (self_dual ? (*self_dual ? "yes" : "no") : "undecidable") << "\n";
        text << "degree  dim  classes\n";
        for (int k = 0; k <= std::max(0, p.max_degree()); ++k) {
            text << k << "       " << coh.dim(k) << "   ";
            bool first = true;
            for (const std::string& label : coh.labels(k)) {
                text << (first ? " " : ", ") << label;
                first = false;
            }
            text << "\n";
        }
    }
    emit(text.str(), out_path);
    return 0;
}

int cmd_morse(const ProblemFile& file, OutputFormat format, const std::string& out_path) {
    const MorseProblem& problem = *file.morse;
    validate(problem);
    const GradedPoly m = morse_polynomial(problem);
    const GradedPoly m_flip = morse_polynomial(flip_problem(problem));
    const StrongCheck strong = check_strong(problem);
    const AdjointDualityCheck adjoint = check_adjoint_duality(problem);
    const RefinedCheck refined = refined_morse(problem);
    const LefschetzCheck lef = lefschetz(problem);
    const std::map<int, bool> perfect = perfectness(problem);
    const bool ok = strong.ok() && adjoint.ok() && refined.ok() && lef.ok();

    std::ostringstream text;
    if (format == OutputFormat::Json) {
        json out{{"label", problem.label},
                 {"morse", to_json(m)},
                 {"morse_flip", to_json(m_flip)},
                 {"poincare", to_json(strong.poincare)},
                 {"strong", json{{"quotient", strong.quotient ? to_json(*strong.quotient) : json(nullptr)},
                                 {"ok", strong.ok()}}},
                 {"adjoint", json{{"reversed_morse", to_json(adjoint.reversed_morse)},
                                  {"adjoint_morse", to_json(adjoint.adjoint_morse)},
                                  {"ok", adjoint.ok()}}},
                 {"refined", json{{"applicable", refined.applicable},
                                  {"polynomial", refined.applicable ? to_json(refined.refined) : json(nullptr)},
                                  {"error", refined.error ? to_json(*refined.error) : json(nullptr)},
                                  {"ok", refined.ok()}}},
                 {"lefschetz", json{{"morse", lef.morse_at_minus_one},
                                    {"poincare", lef.poincare_at_minus_one},
                                    {"ok", lef.ok()}}},
                 {"perfect", json::object()},
                 {"ok", ok}};
        for (const auto& [deg, flag] : perfect) out["perfect"][std::to_string(deg)] = flag;
        text << out.dump(2) << "\n";
    } else {
        if (!problem.label.empty()) text << "problem: " << problem.label << "\n";
        text << "M(h)  = " << m.to_string() << "\n";
        text << "M(-h) = " << m_flip.to_string() << "\n";
        text << "P     = " << strong.poincare.to_string() << "\n";
        if (strong.quotient)
            text << "Q     = " << strong.quotient->to_string() << "  (strong inequalities hold)\n";
        else
            text << "Q     = none  (strong inequalities FAIL)\n";
        text << "adjoint duality: " << (adjoint.ok() ? "ok" : "FAIL") << "  [reversed "
             << adjoint.reversed_morse.to_string() << " vs adjoint " << adjoint.adjoint_morse.to_string()
             << "]\n";
        if (refined.applicable) {
            text << "refined M = " << refined.refined.to_string();
            if (refined.error)
                text << ", error = " << refined.error->to_string() << "\n";
            else
                text << ", refined inequality FAILS\n";
        } else {
            text << "refined inequality: not applicable (perversities are not all self-dual)\n";
        }
        text << "perfect degrees:";
        for (const auto& [deg, flag] : perfect)
            if (flag) text << " " << deg;
        text << "\n";
        text << "lefschetz: M(-1) = " << lef.morse_at_minus_one << ", P(-1) = " << lef.poincare_at_minus_one
             << (lef.ok() ? "  ok" : "  FAIL") << "\n";
        text << "all checks: " << (ok ? "pass" : "FAIL") << "\n";
    }
    emit(text.str(), out_path);
    return ok ? 0 : 1;
}

SpacePtr model_space(const SpectralModel& m) {
    if (m.kind == SpectralKind::SpindleCircle) return make_suspension(make_circle(), Subspace::zero());
    return make_suspension(make_torus(2), m.w);
}

int cmd_spectral(const ProblemFile& file, OutputFormat format, const std::string& out_path, int threads) {
    const SpectralModel& model = *file.spectral;
    const SpacePtr space = model_space(model);
    const GradedPoly symbolic = morse_polynomial(suspension_height_problem(space));
    const GradedPoly poincare = global_cohomology(*space).poly();
    const SweepResult result = sweep(model, threads);

    const int top = link_dimension(model) + 1;
    auto matches = [top](const std::vector<int>& counts, const GradedPoly& p) {
        for (int k = 0; k <= top; ++k)
            if (counts[k] != p.coeff(k)) return false;
        return true;
    };
    bool agree = result.stable && matches(result.reports.back().counts(), symbolic);
    for (const SpectrumReport& r : result.reports)
        if (r.epsilon == 0.0 && !matches(r.counts(), poincare)) agree = false;

    std::ostringstream text;
    if (format == OutputFormat::Csv) {
        text << "epsilon,degree,index,eigenvalue\n";
        for (const SpectrumReport& r : result.reports)
            for (size_t k = 0; k < r.degrees.size(); ++k)
                for (size_t i = 0; i < r.degrees[k].low_eigenvalues.size(); ++i) {
                    char buf[96];
                    std::snprintf(buf, sizeof(buf), "%.12g,%zu,%zu,%.12g\n", r.epsilon, k, i,
                                  r.degrees[k].low_eigenvalues[i]);
                    text << buf;
                }
    } else if (format == OutputFormat::Json) {
        json out{{"model", to_json(model)},
                 {"symbolic_morse", to_json(symbolic)},
                 {"poincare", to_json(poincare)},
                 {"reports", json::array()},
                 {"stable", result.stable},
                 {"agree", agree}};
        for (const SpectrumReport& r : result.reports) {
            json rep{{"epsilon", r.epsilon}, {"threshold", r.threshold}, {"degrees", json::array()}};
            for (const DegreeSpectrum& d : r.degrees)
                rep["degrees"].push_back({{"small_count", d.small_count},
                                          {"gap_ratio", gap_to_json(d.gap_ratio)},
                                          {"low_eigenvalues", d.low_eigenvalues}});
            out["reports"].push_back(std::move(rep));
        }
        text << out.dump(2) << "\n";
    } else {
        text << "model: " << (model.kind == SpectralKind::SpindleCircle ? "spindle_circle" : "suspension_torus2")
             << "  N=" << model.grid_points << "  mode_cutoff=" << model.mode_cutoff << "\n";
        text << "symbolic M = " << symbolic.to_string() << ", P = " << poincare.to_string() << "\n";
        for (const SpectrumReport& r : result.reports) {
            text << "epsilon " << fmt(r.epsilon) << ": threshold " << fmt(r.threshold) << ", counts";
            for (int c : r.counts()) text << " " << c;
            text << ", gap ratios";
            for (const DegreeSpectrum& d : r.degrees) text << " " << gap_to_text(d.gap_ratio);
            text << "\n";
        }
        text << "stable counts: " << (result.stable ? "yes" : "no") << "\n";
        text << "agrees with symbolic engine: " << (agree ? "yes" : "no") << "\n";
    }
    emit(text.str(), out_path);
    return agree ? 0 : 1;
}

json problem_json(const json& payload, const char* key) {
    return json{{"version", 1}, {key, payload}};
}

json cone_t2(const json& w) { return json{{"cone", json{{"link", json{{"torus", 2}}}, {"w", w}}}}; }

int cmd_examples(const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const json span_d1{{"span", json::array({json::array({1, 0})})}};
    const json span_diag{{"span", json::array({json::array({1, 1})})}};
    const json span_full{{"span", json::array({json::array({1, 0}), json::array({0, 1})})}};
    const json span_zero{{"span", json::array()}};

    auto disc_point = [](const char* name, int stable_dim, int unstable_dim, const json& h) {
        json c{{"name", name}, {"h_value", h}};
        if (stable_dim > 0) c["stable"] = json::array({json{{"disc", stable_dim}}});
        if (unstable_dim > 0) c["unstable"] = json::array({json{{"disc", unstable_dim}}});
        return c;
    };

    std::vector<std::pair<std::string, json>> files;

    // Height function on the 2-torus with a doubled top pair of critical points.
    files.push_back({"torus_height.json",
                     problem_json(json{{"space", json{{"torus", 2}}},
                                       {"label", "torus height"},
                                       {"components",
                                        json::array({disc_point("min", 2, 0, -2),
                                                     disc_point("saddle1", 1, 1, -1),
                                                     disc_point("saddle2", 1, 1, 0),
                                                     disc_point("saddle3", 1, 1, 1),
                                                     disc_point("max1", 0, 2, 2),
                                                     disc_point("max2", 0, 2, 2)})}},
                                  "morse")});

    auto suspension_problem = [&](const json& link, const json& w, const json& cone, const char* label) {
        json space{{"suspension", json{{"link", link}, {"w", w}}}};
        json min{{"name", "min"}, {"stable", json::array({cone})}, {"h_value", -1}};
        json max{{"name", "max"}, {"unstable", json::array({cone})}, {"h_value", 1}};
        return problem_json(
            json{{"space", space}, {"label", label}, {"components", json::array({min, max})}}, "morse");
    };

    files.push_back({"suspension_torus.json",
                     suspension_problem(json{{"torus", 2}}, span_d1, cone_t2(span_d1),
                                        "suspended 2-torus height")});

    const json sigma_t2{{"suspension", json{{"link", json{{"torus", 2}}}, {"w", span_d1}}}};
    files.push_back({"double_suspension.json",
                     suspension_problem(sigma_t2, span_zero,
                                        json{{"cone", json{{"link", sigma_t2}, {"w", span_zero}}}},
                                        "doubly suspended 2-torus height")});

    files.push_back({"suspension_torus_v_full.json",
                     suspension_problem(json{{"torus", 2}}, span_full, cone_t2(span_full),
                                        "suspended 2-torus, full middle perversity")});

    // The same space with the zero perversity and the height reversed.
    files.push_back(
        {"suspension_torus_v_zero.json",
         problem_json(json{{"space", json{{"suspension", json{{"link", json{{"torus", 2}}}, {"w", span_zero}}}}},
                           {"label", "suspended 2-torus, zero middle perversity, reversed height"},
                           {"components",
                            json::array({json{{"name", "min"},
                                              {"unstable", json::array({cone_t2(span_zero)})},
                                              {"h_value", 1}},
                                         json{{"name", "max"},
                                              {"stable", json::array({cone_t2(span_zero)})},
                                              {"h_value", -1}}})}},
                      "morse")});

    // A fourfold with one conical point: a smooth critical surface plus the cone point.
    const json surface{{"smooth", json{{"name", "surface"},
                                       {"classes", json::array({json{{"degree", 0}, {"label", "1"}},
                                                                json{{"degree", 2}, {"label", "vol"}}})},
                                       {"dim", 2}}}};
    const json fourfold{{"smooth",
                         json{{"name", "fourfold"},
                              {"classes", json::array({json{{"degree", 0}, {"label", "1"}},
                                                       json{{"degree", 2}, {"label", "h"}},
                                                       json{{"degree", 4}, {"label", "vol"}}})},
                              {"dim", 4}}}};
    files.push_back(
        {"fourfold_cone.json",
         problem_json(json{{"space", fourfold},
                           {"label", "fourfold with isolated cone point"},
                           {"components",
                            json::array({json{{"name", "bottom"},
                                              {"base", surface},
                                              {"stable", json::array({json{{"disc", 2}}})},
                                              {"h_value", -1}},
                                         json{{"name", "cone_point"},
                                              {"unstable", json::array({json{{"disc", 4}}})},
                                              {"h_value", 1}}})}},
                      "morse")});

    files.push_back({"diagonal_selfdual.json",
                     problem_json(json{{"suspension", json{{"link", json{{"torus", 2}}}, {"w", span_diag}}}},
                                  "cohomology")});

    files.push_back({"spectral_spindle.json",
                     problem_json(json{{"kind", "spindle_circle"},
                                       {"grid_points", 400},
                                       {"mode_cutoff", 3},
                                       {"epsilon", json::array({2, 5, 10, 20})},
                                       {"threshold", "auto"}},
                                  "spectral")});

    files.push_back({"spectral_torus2.json",
                     problem_json(json{{"kind", "suspension_torus2"},
                                       {"w", span_d1},
                                       {"grid_points", 200},
                                       {"mode_cutoff", 2},
                                       {"epsilon", json::array({0, 5, 10, 20})},
                                       {"threshold", "auto"}},
                                  "spectral")});

    for (const auto& [name, content] : files) {
        problem_from_json(content);  // every shipped file must pass its own validation
        std::ofstream out(fs::path(out_dir) / name);
        if (!out) throw input_error("cannot write '" + (fs::path(out_dir) / name).string() + "'");
        out << content.dump(2) << "\n";
    }
    std::cout << "wrote " << files.size() << " problem files to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stratified Morse theory calculator: L2 cohomology, Morse polynomial checks, and "
                 "Witten Laplacian spectra for cone and suspension spaces"};
    app.require_subcommand(1);

    std::string file_path;
    std::string format_flag;
    std::string out_path;
    std::string threshold_flag;
    std::vector<double> epsilon_flag;
    int grid_flag = 0;
    int threads = 1;

    auto add_common = [&](CLI::App* sub, bool with_spectral_flags) {
        sub->add_option("file", file_path, "problem file (JSON)")->required();
        sub->add_option("--format", format_flag, "output format: text, json, or csv");
        sub->add_option("--out", out_path, "write the report to a file instead of stdout");
        if (with_spectral_flags) {
            sub->add_option("--threads", threads, "parallel workers for per-mode eigensolves");
            sub->add_option("--threshold", threshold_flag, "eigenvalue cut c, or 'auto'");
            sub->add_option("--epsilon", epsilon_flag, "override the epsilon list");
            sub->add_option("--grid", grid_flag, "override the radial grid size");
        }
    };

    CLI::App* coh = app.add_subcommand("cohomology", "global L2 cohomology of a space");
    add_common(coh, false);
    CLI::App* morse = app.add_subcommand("morse", "Morse polynomial inequalities and duality checks");
    add_common(morse, false);
    CLI::App* spectral = app.add_subcommand("spectral", "Witten Laplacian eigenvalue sweep");
    add_common(spectral, true);
    CLI::App* examples = app.add_subcommand("examples", "regenerate the shipped problem files");
    std::string examples_dir = "problems";
    examples->add_option("--out", examples_dir, "target directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (examples->parsed()) return cmd_examples(examples_dir);

        strata::ProblemFile file = strata::load_problem_file(file_path);
        strata::OutputFormat format = format_flag.empty() ? file.format : strata::format_from_string(format_flag);

        if (coh->parsed()) {
            if (!file.cohomology) throw strata::input_error("'" + file_path + "' is not a cohomology problem");
            return cmd_cohomology(file, format, out_path);
        }
        if (morse->parsed()) {
            if (!file.morse) throw strata::input_error("'" + file_path + "' is not a morse problem");
            return cmd_morse(file, format, out_path);
        }
        if (!file.spectral) throw strata::input_error("'" + file_path + "' is not a spectral problem");
        if (grid_flag > 0) file.spectral->grid_points = grid_flag;
        if (!epsilon_flag.empty()) file.spectral->epsilons = epsilon_flag;
        if (!threshold_flag.empty()) {
            if (threshold_flag == "auto")
                file.spectral->threshold.reset();
            else
                file.spectral->threshold = std::stod(threshold_flag);
        }
        return cmd_spectral(file, format, out_path, threads);
    } catch (const strata::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
