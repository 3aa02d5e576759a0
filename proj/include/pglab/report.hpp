#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pglab/theorems.hpp"

namespace pglab {

// Insertion-ordered JSON keeps reports laid out the way they are assembled;
// all writers below are deterministic for a fixed input.
using ordered_json = nlohmann::ordered_json;

inline ordered_json cut_value_json(const CutValue& v) {
    if (v.is_infinite()) return ordered_json("infinite");
    return ordered_json(v.value());
}

namespace detail {

inline ordered_json case_json(const CaseResult& c) {
    ordered_json j;
    j["case"] = c.tag ? ordered_json(*c.tag) : ordered_json(nullptr);
    ordered_json w = ordered_json::array();
    for (const auto& ref : c.witness) {
        ordered_json r;
        r["subgroup_index"] = ref.index;
        r["order"] = ref.order;
        w.push_back(std::move(r));
    }
    j["witness"] = std::move(w);
    return j;
}

inline ordered_json thm1_json(const SeparabilityVerdict& v) {
    ordered_json j;
    j["separable_graph"] = v.sep_graph;
    j["delta_ge_3"] = v.delta_ge_3;
    ordered_json c = case_json(v.condition);
    j["case"] = c["case"];
    j["witness"] = c["witness"];
    j["all_agree"] = v.all_agree;
    return j;
}

inline ordered_json thm2_json(const EqualityVerdict& v) {
    ordered_json j;
    j["kappa"] = v.kappa;
    j["ckappa"] = cut_value_json(v.ckappa);
    j["equality_graph"] = v.equality_graph;
    ordered_json c = case_json(v.condition);
    j["case"] = c["case"];
    j["witness"] = c["witness"];
    j["condition_group"] = v.condition_group;
    j["agree"] = v.agree;
    return j;
}

inline ordered_json lemmas_json(const std::vector<LemmaVerdict>& lemmas) {
    ordered_json arr = ordered_json::array();
    for (const auto& lv : lemmas) {
        ordered_json j;
        j["id"] = lv.id;
        j["status"] = lemma_status_name(lv.status);
        j["detail"] = lv.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string thm_cell(const SurveyRow& row, bool first) {
    if (row.status == "skipped:size") return "skipped:size";
    if (row.status == "error") return "error";
    if (!row.p) return "n/a";
    if (first) {
        if (!row.thm1) return "n/a";
        std::string c = row.thm1->condition.tag ? *row.thm1->condition.tag : "none";
        return (row.thm1->all_agree ? "agree:" : "disagree:") + c;
    }
    if (!row.thm2) return "n/a";
    std::string c = row.thm2->condition.tag ? *row.thm2->condition.tag : "none";
    return (row.thm2->agree ? "agree:" : "disagree:") + c;
}

inline std::string lemmas_cell(const SurveyRow& row) {
    if (row.lemmas.empty()) return "n/a";
    std::string fails;
    for (const auto& lv : row.lemmas)
        if (lv.status == LemmaStatus::Fails)
            fails += (fails.empty() ? "" : "|") + lv.id;
    return fails.empty() ? "ok" : "FAIL:" + fails;
}

}  // namespace detail

inline ordered_json survey_row_json(const SurveyRow& row) {
    ordered_json j;
    j["name"] = row.name;
    j["order"] = row.order;
    j["p"] = row.p ? ordered_json(*row.p) : ordered_json(nullptr);
    j["tags"] = row.tags;
    j["status"] = row.status;
    if (row.status == "ok") {
        j["delta"] = row.delta;
        j["num_maximal_cyclic"] = row.num_maximal;
        j["kappa"] = row.kappa;
        j["ckappa"] = cut_value_json(row.ckappa);
        j["min_degree"] = row.min_degree;
        j["edge_connectivity"] = row.edge_connectivity;
        j["edge_connectivity_equals_min_degree"] = row.edge_conn_equals_min_degree;
        j["separable"] = row.separable;
        j["power_equals_enhanced"] = row.power_equals_enhanced;
        j["all_cyclic_subgroups_prime_power"] = row.all_prime_power;
        j["thm1"] = row.thm1 ? detail::thm1_json(*row.thm1) : ordered_json(nullptr);
        j["thm2"] = row.thm2 ? detail::thm2_json(*row.thm2) : ordered_json(nullptr);
        if (row.remark) {
            ordered_json r;
            r["graphs_equal"] = row.remark->equal_graphs;
            r["verdicts_match"] = row.remark->verdicts_match;
            j["enhanced_remark"] = std::move(r);
        } else {
            j["enhanced_remark"] = nullptr;
        }
        j["lemmas"] = detail::lemmas_json(row.lemmas);
        j["converse_counterexample"] = row.converse_counterexample;
        {
            ordered_json d;
            d["delta_ge_2"] = row.delta2.delta_ge_2;
            d["no_maximal_cyclic_of_order_2"] = row.delta2.no_maximal_cyclic_of_order_2;
            d["no_lattice_maximal_subgroup_of_order_2"] =
                row.delta2.no_lattice_maximal_of_order_2;
            d["two_maximal_cyclic_of_order_gt_2"] = row.delta2.two_maximal_cyclic_above_2;
            d["cyclic_reading_agrees"] = row.delta2.cyclic_reading_agrees;
            d["literal_reading_agrees"] = row.delta2.literal_reading_agrees;
            d["corrected_reading_agrees"] = row.delta2.corrected_agrees;
            j["delta_ge_2_readings"] = std::move(d);
        }
    }
    j["failure"] = row.failure;
    return j;
}

inline ordered_json survey_json(const SurveyReport& report, const ordered_json& config) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "survey";
    j["config"] = config;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) rows.push_back(survey_row_json(row));
    j["rows"] = std::move(rows);
    ordered_json s;
    s["groups"] = report.groups;
    s["disagreements"] = report.disagreements;
    s["lemma_failures"] = report.lemma_failures;
    s["skipped"] = report.skipped;
    s["converse_counterexamples"] = report.converse_counterexamples;
    j["summary"] = std::move(s);
    return j;
}

// Fixed, documented column order.
inline std::string survey_csv(const SurveyReport& report) {
    std::ostringstream out;
    out << "name,order,p,delta,kappa,ckappa,separable,thm1,thm2,lemmas\n";
    for (const auto& row : report.rows) {
        out << row.name << ',' << row.order << ',';
        if (row.p) out << *row.p;
        else out << '-';
        out << ',' << row.delta << ',' << row.kappa << ','
            << row.ckappa.to_string() << ','
            << (row.separable ? "true" : "false") << ','
            << detail::thm_cell(row, true) << ',' << detail::thm_cell(row, false)
            << ',' << detail::lemmas_cell(row) << '\n';
    }
    return out.str();
}

inline std::string survey_text(const SurveyReport& report) {
    std::ostringstream out;
    for (const auto& row : report.rows) {
        out << row.name << " (order " << row.order;
        if (row.p) out << ", p=" << *row.p;
        out << "): ";
        if (row.status != "ok") {
            out << row.status << " " << row.failure << '\n';
            continue;
        }
        out << "delta=" << row.delta << " kappa=" << row.kappa
            << " ckappa=" << row.ckappa.to_string()
            << " separable=" << (row.separable ? "yes" : "no")
            << " thm1=" << detail::thm_cell(row, true)
            << " thm2=" << detail::thm_cell(row, false)
            << " lemmas=" << detail::lemmas_cell(row);
        if (row.converse_counterexample) out << " [converse counterexample]";
        if (!row.failure.empty()) out << "  FAILURE: " << row.failure;
        out << '\n';
    }
    out << "summary: groups=" << report.groups
        << " disagreements=" << report.disagreements
        << " lemma_failures=" << report.lemma_failures
        << " skipped=" << report.skipped << " converse_counterexamples=";
    if (report.converse_counterexamples.empty()) out << "none";
    for (size_t i = 0; i < report.converse_counterexamples.size(); ++i)
        out << (i ? "," : "") << report.converse_counterexamples[i];
    out << '\n';
    return out.str();
}

inline ordered_json group_info_json(const FiniteGroup& g) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "group-info";
    j["name"] = g.name();
    j["order"] = g.order();
    auto p = g.p_group_prime();
    j["p"] = p ? ordered_json(*p) : ordered_json(nullptr);
    j["is_cyclic"] = g.is_cyclic();
    j["is_generalized_quaternion"] = g.is_generalized_quaternion();

    std::map<int, int> hist;
    for (int x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
    ordered_json h = ordered_json::array();
    for (auto [ord, cnt] : hist) {
        ordered_json e;
        e["element_order"] = ord;
        e["count"] = cnt;
        h.push_back(std::move(e));
    }
    j["element_order_histogram"] = std::move(h);

    std::map<int, int> morders;
    for (int i : g.maximal_cyclic_indices()) ++morders[g.cyclic_subgroups()[i].order];
    ordered_json m = ordered_json::array();
    for (auto [ord, cnt] : morders) {
        ordered_json e;
        e["order"] = ord;
        e["count"] = cnt;
        m.push_back(std::move(e));
    }
    j["num_cyclic_subgroups"] = static_cast<int>(g.cyclic_subgroups().size());
    j["num_maximal_cyclic"] = static_cast<int>(g.maximal_cyclic_indices().size());
    j["maximal_cyclic_orders"] = std::move(m);
    j["difference_number"] = g.difference_number();
    return j;
}

inline std::string group_info_text(const FiniteGroup& g) {
    std::ostringstream out;
    out << "name: " << g.name() << '\n';
    out << "order: " << g.order() << '\n';
    auto p = g.p_group_prime();
    if (p) out << "p-group: yes (p=" << *p << ")\n";
    else out << "p-group: no\n";
    out << "cyclic: " << (g.is_cyclic() ? "yes" : "no") << '\n';
    out << "generalized quaternion: "
        << (g.is_generalized_quaternion() ? "yes" : "no") << '\n';

    std::map<int, int> hist;
    for (int x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
    out << "element order histogram:";
    for (auto [ord, cnt] : hist) out << ' ' << ord << ":" << cnt;
    out << '\n';

    std::map<int, int> morders;
    for (int i : g.maximal_cyclic_indices()) ++morders[g.cyclic_subgroups()[i].order];
    out << "maximal cyclic subgroups: " << g.maximal_cyclic_indices().size()
        << " (orders:";
    for (auto [ord, cnt] : morders) out << ' ' << ord << "x" << cnt;
    out << ")\n";
    out << "difference number: " << g.difference_number() << '\n';
    return out.str();
}

inline ordered_json connectivity_json(const std::string& graph_name, const Graph& g,
                                      const ConnectivityReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "connectivity";
    j["graph"] = graph_name;
    j["vertices"] = g.num_vertices();
    j["edges"] = static_cast<long long>(g.num_edges());
    j["kappa"] = rep.kappa;
    j["kappa_cutset"] =
        rep.kappa_cutset ? ordered_json(*rep.kappa_cutset) : ordered_json(nullptr);
    j["min_degree"] = rep.min_degree;
    j["edge_connectivity"] = rep.edge_connectivity
                                 ? ordered_json(*rep.edge_connectivity)
                                 : ordered_json(nullptr);
    j["cyclically_separable"] = rep.separable;
    if (rep.separability_witness) {
        ordered_json w;
        w["cycle1"] = rep.separability_witness->first;
        w["cycle2"] = rep.separability_witness->second;
        j["separability_witness"] = std::move(w);
    } else {
        j["separability_witness"] = nullptr;
    }
    j["ckappa"] = cut_value_json(rep.ckappa);
    j["ckappa_cutset"] =
        rep.ckappa_cutset ? ordered_json(*rep.ckappa_cutset) : ordered_json(nullptr);
    return j;
}

inline std::string connectivity_text(const std::string& graph_name, const Graph& g,
                                     const ConnectivityReport& rep) {
    std::ostringstream out;
    auto vec = [](const std::vector<int>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    out << "graph: " << graph_name << '\n';
    out << "vertices: " << g.num_vertices() << "  edges: " << g.num_edges() << '\n';
    out << "kappa: " << rep.kappa;
    if (rep.kappa_cutset) out << "  cutset: " << vec(*rep.kappa_cutset);
    else out << "  cutset: none (complete or trivial)";
    out << '\n';
    out << "min degree: " << rep.min_degree << '\n';
    if (rep.edge_connectivity)
        out << "edge connectivity: " << *rep.edge_connectivity << '\n';
    out << "cyclically separable: " << (rep.separable ? "yes" : "no") << '\n';
    if (rep.separability_witness)
        out << "  witness cycles: " << vec(rep.separability_witness->first) << " / "
            << vec(rep.separability_witness->second) << '\n';
    out << "ckappa: " << rep.ckappa.to_string();
    if (rep.ckappa_cutset) out << "  cutset: " << vec(*rep.ckappa_cutset);
    out << '\n';
    return out.str();
}

}  // namespace pglab
