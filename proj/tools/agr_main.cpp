#include "agr/serialization.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

agr::EnumerationBudget parse_bound(const std::string& s,
                                   const std::vector<std::string>& labels) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw agr::SpecError("bound must be 'nodes,edges': " + s);
    try {
        int nodes = std::stoi(s.substr(0, comma));
        int edges = std::stoi(s.substr(comma + 1));
        if (nodes < 0 || edges < 0) throw std::invalid_argument("negative");
        return {nodes, edges, labels};
    } catch (const std::exception&) {
        throw agr::SpecError("bound must be 'nodes,edges': " + s);
    }
}

agr::StepMode parse_mode(const std::string& s) {
    if (s == "squiggle") return agr::StepMode::squiggle;
    if (s == "hook") return agr::StepMode::hook;
    throw agr::SpecError("unknown mode: " + s + " (use squiggle or hook)");
}

json ann_pair_json(const agr::AnnotationFunctor& fun, const agr::Graph& g,
                   const agr::AnnPair& p) {
    return {{"lower", annotation_json(fun, g, p.lower)},
            {"upper", annotation_json(fun, g, p.upper)}};
}

json report_json(const agr::LanguageReport& r) {
    return {{"ok", r.ok}, {"mismatches", r.mismatches}};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw agr::SpecError("cannot write file: " + path);
    out << content;
}

std::string status_str(agr::PropertyOutcome::Status s) {
    switch (s) {
        case agr::PropertyOutcome::Status::pass: return "pass";
        case agr::PropertyOutcome::Status::fail: return "fail";
        case agr::PropertyOutcome::Status::capability_absent: return "capability_absent";
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abstract graph rewriting: materialization, annotated steps, verifiers"};
    app.require_subcommand(1);

    std::string spec_path, phi_name, rule_name, match_name, ann_name, graph_name, target_name;
    std::string mode_name = "hook", bound_str = "3,4", battery_str = "3,3", dot_path;
    std::string functor_name = "mult";
    int n_value = 2;
    int rc = 0;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", spec_path, "spec file (JSON)")->required();
    };

    CLI::App* materialize_cmd = app.add_subcommand("materialize", "Materialize a morphism");
    add_spec(materialize_cmd);
    materialize_cmd->add_option("--phi", phi_name, "morphism to materialize")->required();
    materialize_cmd->add_option("--dot", dot_path, "write DOT here (non-image edges dashed)");
    materialize_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        agr::Materialization m = agr::materialize(spec.morphism(phi_name));
        if (!dot_path.empty()) write_file(dot_path, agr::render_dot_highlighted(m.mat, m.eta));
        emit({{"status", "ok"},
              {"graph", agr::graph_json(m.mat)},
              {"eta", agr::morphism_json(m.eta)},
              {"psi", agr::morphism_json(m.psi)},
              {"counts",
               {{"nodes", m.mat.nodes().size()},
                {"edges", m.mat.edges().size()},
                {"eta_image_edges", m.eta.edge_map().size()}}}});
    });

    CLI::App* rmat_cmd =
        app.add_subcommand("rmaterialize", "Rewritable materialization of a morphism");
    add_spec(rmat_cmd);
    rmat_cmd->add_option("--phi", phi_name)->required();
    rmat_cmd->add_option("--rule", rule_name)->required();
    rmat_cmd->add_option("--dot", dot_path);
    rmat_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        agr::RewritableMaterialization rm =
            agr::rewritable_materialize(spec.morphism(phi_name), spec.rule(rule_name).phi_l);
        const agr::Graph& f = rm.fpbc.beta.dom();
        if (!dot_path.empty())
            write_file(dot_path, agr::render_dot_highlighted(rm.rmat, rm.n_l));
        emit({{"status", "ok"},
              {"f", agr::graph_json(f)},
              {"rmat", agr::graph_json(rm.rmat)},
              {"n_l", agr::morphism_json(rm.n_l)},
              {"psi", agr::morphism_json(rm.psi)},
              {"counts",
               {{"f_nodes", f.nodes().size()},
                {"f_edges", f.edges().size()},
                {"rmat_nodes", rm.rmat.nodes().size()},
                {"rmat_edges", rm.rmat.edges().size()}}}});
    });

    CLI::App* dpo_cmd = app.add_subcommand("dpo-step", "One DPO step at a mono match");
    add_spec(dpo_cmd);
    dpo_cmd->add_option("--rule", rule_name)->required();
    dpo_cmd->add_option("--match", match_name)->required();
    dpo_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        const agr::Production& p = spec.rule(rule_name);
        const agr::GraphMorphism& m = spec.morphism(match_name);
        if (!(m.dom() == p.left) || !agr::is_mono(m))
            throw agr::SpecError("match " + match_name +
                                 " is not a mono from the rule's left-hand side");
        std::optional<agr::DpoTrace> tr = agr::dpo_step(p, m);
        if (!tr) {
            emit({{"status", "violation"}, {"reason", "pushout complement does not exist"}});
            rc = 1;
            return;
        }
        emit({{"status", "ok"},
              {"context", agr::graph_json(tr->context)},
              {"result", agr::graph_json(tr->result)},
              {"co_match", agr::morphism_json(tr->co_match)}});
    });

    auto run_step = [&](agr::StepMode mode, const std::string& mode_label) {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        const agr::AnnotatedGraph& a = spec.annotated_graph(ann_name);
        agr::AbstractStep st =
            agr::abstract_step(a, spec.rule(rule_name), spec.morphism(phi_name), mode);
        json mats = json::array(), post = json::array();
        for (const agr::AnnPair& m : st.mats)
            mats.push_back(ann_pair_json(a.functor, st.rm.rmat, m));
        for (const agr::AnnPair& pr : st.post)
            post.push_back(ann_pair_json(a.functor, st.trace.result, pr));
        if (!dot_path.empty()) {
            if (st.post.empty())
                write_file(dot_path, agr::render_dot(st.trace.result));
            else
                write_file(dot_path,
                           agr::render_dot_annotated({st.trace.result, a.functor,
                                                      st.post.front().lower,
                                                      st.post.front().upper}));
        }
        emit({{"status", "ok"},
              {"mode", mode_label},
              {"rmat", agr::graph_json(st.rm.rmat)},
              {"result", agr::graph_json(st.trace.result)},
              {"mats", mats},
              {"post", post}});
    };

    CLI::App* step_cmd = app.add_subcommand("abstract-step", "Abstract rewriting step");
    add_spec(step_cmd);
    step_cmd->add_option("--annotated", ann_name)->required();
    step_cmd->add_option("--rule", rule_name)->required();
    step_cmd->add_option("--phi", phi_name)->required();
    step_cmd->add_option("--mode", mode_name, "squiggle or hook");
    step_cmd->add_option("--dot", dot_path, "write annotated result DOT here");
    step_cmd->callback([&]() { run_step(parse_mode(mode_name), mode_name); });

    CLI::App* post_cmd = app.add_subcommand("post", "Strongest post-condition (hook mode)");
    add_spec(post_cmd);
    post_cmd->add_option("--annotated", ann_name)->required();
    post_cmd->add_option("--rule", rule_name)->required();
    post_cmd->add_option("--phi", phi_name)->required();
    post_cmd->add_option("--dot", dot_path);
    post_cmd->callback([&]() { run_step(agr::StepMode::hook, "hook"); });

    CLI::App* member_cmd = app.add_subcommand("member", "Language membership of a graph");
    add_spec(member_cmd);
    member_cmd->add_option("--graph", graph_name)->required();
    member_cmd->add_option("--annotated", ann_name)->required();
    member_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        std::optional<agr::GraphMorphism> w =
            agr::member(spec.graph(graph_name), spec.annotated_graph(ann_name));
        if (w) {
            emit({{"status", "ok"}, {"member", true}, {"witness", agr::morphism_json(*w)}});
        } else {
            emit({{"status", "violation"}, {"member", false}});
            rc = 1;
        }
    });

    CLI::App* sound_cmd = app.add_subcommand("verify-soundness", "Bounded soundness check");
    add_spec(sound_cmd);
    sound_cmd->add_option("--annotated", ann_name)->required();
    sound_cmd->add_option("--rule", rule_name)->required();
    sound_cmd->add_option("--mode", mode_name, "squiggle or hook");
    sound_cmd->add_option("--bound", bound_str, "nodes,edges (default 3,4)");
    sound_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        agr::VerifyReport r =
            agr::verify_soundness(spec.annotated_graph(ann_name), spec.rule(rule_name),
                                  parse_mode(mode_name), parse_bound(bound_str, spec.labels));
        if (r.ok) {
            emit({{"status", "ok"}});
        } else {
            emit({{"status", "violation"}, {"detail", r.detail}});
            rc = 1;
        }
    });

    CLI::App* complete_cmd =
        app.add_subcommand("verify-completeness", "Bounded completeness check (hook mode)");
    add_spec(complete_cmd);
    complete_cmd->add_option("--annotated", ann_name)->required();
    complete_cmd->add_option("--rule", rule_name)->required();
    complete_cmd->add_option("--phi", phi_name)->required();
    complete_cmd->add_option("--bound", bound_str, "nodes,edges (default 3,4)");
    complete_cmd->add_option("--battery-bound", battery_str,
                             "property battery bound (default 3,3)");
    complete_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        agr::VerifyReport r = agr::verify_completeness(
            spec.annotated_graph(ann_name), spec.rule(rule_name), spec.morphism(phi_name),
            parse_bound(bound_str, spec.labels), parse_bound(battery_str, spec.labels));
        if (r.ok) {
            emit({{"status", "ok"}});
        } else {
            emit({{"status", "violation"}, {"refused", r.refused}, {"detail", r.detail}});
            rc = 1;
        }
    });

    CLI::App* lang_cmd =
        app.add_subcommand("verify-languages", "Bounded language equalities for a rule and phi");
    add_spec(lang_cmd);
    lang_cmd->add_option("--rule", rule_name)->required();
    lang_cmd->add_option("--phi", phi_name)->required();
    lang_cmd->add_option("--bound", bound_str, "nodes,edges (default 3,4)");
    lang_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        const agr::Production& p = spec.rule(rule_name);
        const agr::GraphMorphism& phi = spec.morphism(phi_name);
        agr::EnumerationBudget bud = parse_bound(bound_str, spec.labels);
        agr::Materialization mat = agr::materialize(phi);
        agr::RewritableMaterialization rm = agr::rewritable_materialize(phi, p.phi_l);
        agr::LanguageReport r1 = agr::materialization_language_check(mat, bud);
        agr::LanguageReport r2 = agr::rmat_language_check(rm, p, bud);
        agr::LanguageReport r3 = agr::rewriting_match_language_check(p, rm.n_l, bud);
        agr::LanguageReport r4 = agr::comatch_language_check(p, phi, bud);
        bool ok = r1.ok && r2.ok && r3.ok && r4.ok;
        emit({{"status", ok ? "ok" : "violation"},
              {"checks",
               {{"materialization", report_json(r1)},
                {"rewritable_materialization", report_json(r2)},
                {"rewriting_matches", report_json(r3)},
                {"comatch", report_json(r4)}}}});
        if (!ok) rc = 1;
    });

    CLI::App* props_cmd = app.add_subcommand("check-annotation-properties",
                                             "Property battery for an annotation functor");
    add_spec(props_cmd);
    std::string props_bound_str = "3,3";
    props_cmd->add_option("--functor", functor_name, "mult, outdeg or path")->required();
    props_cmd->add_option("--n", n_value, "monoid parameter (ignored for path)");
    props_cmd->add_option("--bound", props_bound_str, "nodes,edges (default 3,3)");
    props_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        agr::AnnotationFunctor fun = agr::functor_from_name(functor_name, n_value);
        agr::EnumerationBudget bud = parse_bound(props_bound_str, spec.labels);
        bool all = true;
        json report = json::array();
        for (agr::AnnotationProperty prop :
             {agr::AnnotationProperty::homomorphism, agr::AnnotationProperty::adjunction,
              agr::AnnotationProperty::pushout, agr::AnnotationProperty::pushout_standard,
              agr::AnnotationProperty::beck_chevalley, agr::AnnotationProperty::isomorphism}) {
            agr::PropertyOutcome o = agr::check_property(fun, prop, bud);
            json entry{{"property", agr::property_name(prop)}, {"status", status_str(o.status)}};
            if (!o.counterexample.empty()) entry["counterexample"] = o.counterexample;
            if (o.status != agr::PropertyOutcome::Status::pass) all = false;
            report.push_back(entry);
        }
        agr::PropertyOutcome wb = agr::check_well_behaved_subtraction(fun, bud);
        json wbj{{"status", status_str(wb.status)}};
        if (!wb.counterexample.empty()) wbj["counterexample"] = wb.counterexample;
        if (wb.status != agr::PropertyOutcome::Status::pass) all = false;
        emit({{"status", all ? "ok" : "violation"},
              {"functor", fun.name()},
              {"n", fun.n()},
              {"report", report},
              {"well_behaved_subtraction", wbj}});
        if (!all) rc = 1;
    });

    CLI::App* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a named graph");
    add_spec(dot_cmd);
    dot_cmd->add_option("name", target_name, "graph or annotated graph name")->required();
    dot_cmd->callback([&]() {
        agr::SystemSpec spec = agr::load_system_spec(spec_path);
        if (spec.annotated.count(target_name))
            std::cout << agr::render_dot_annotated(spec.annotated.at(target_name));
        else
            std::cout << agr::render_dot(spec.graph(target_name));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const agr::SpecError& e) {
        emit({{"status", "error"}, {"message", e.what()}});
        return 2;
    } catch (const agr::CapabilityAbsent& e) {
        emit({{"status", "error"}, {"message", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit({{"status", "error"}, {"message", e.what()}});
        return 2;
    }
    return rc;
}
