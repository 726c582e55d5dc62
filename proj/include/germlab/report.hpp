#ifndef GERMLAB_REPORT_HPP
#define GERMLAB_REPORT_HPP

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <germlab/curve_geometry.hpp>
#include <germlab/g_fields.hpp>
#include <germlab/tangent.hpp>

namespace germlab
{

// Insertion-ordered, so emitted JSON is byte-identical for identical inputs.
using report_json = nlohmann::ordered_json;

inline report_json series_json(const series &s)
{
    report_json a = report_json::array();
    for (unsigned i = 0; i <= s.order(); ++i) {
        a.push_back(s[i]);
    }
    return a;
}

inline report_json map_json(const numeric_map &m)
{
    report_json a = report_json::array();
    for (const auto &c : m.components()) {
        a.push_back(to_string(c));
    }
    return a;
}

inline report_json field_json(const field_jet &f)
{
    report_json a = report_json::array();
    for (const auto &c : f.components()) {
        a.push_back(to_string(c, 'y'));
    }
    return a;
}

inline report_json to_json(const field_space &s, bool with_basis = false)
{
    report_json j;
    j["group"] = s.group.spec();
    j["k"] = s.k;
    j["include_constants"] = s.include_constants;
    j["per_degree"] = report_json::array();
    for (unsigned d = s.min_degree(); d <= s.k; ++d) {
        j["per_degree"].push_back({{"d", d}, {"dim", s.per_degree[d].dim()}});
    }
    j["total_dim"] = s.total_dim();
    if (with_basis) {
        j["basis"] = report_json::array();
        for (const auto &f : s.fields(s.k)) {
            j["basis"].push_back(field_json(f));
        }
    }
    return j;
}

inline report_json to_json(const ring_jet &r)
{
    report_json j;
    j["group"] = r.group.spec();
    j["k"] = r.k;
    j["dim"] = r.dim();
    j["basis"] = report_json::array();
    for (const auto &e : r.elements()) {
        j["basis"].push_back(to_string(e, 'y'));
    }
    return j;
}

inline report_json to_json(const linearity_report &r)
{
    report_json j;
    j["linear_only"] = r.linear_only;
    j["witness_degree"] = r.witness_degree ? report_json(*r.witness_degree) : report_json(nullptr);
    j["per_degree_dims"] = r.dims;
    return j;
}

inline report_json to_json(const tangent_report &r)
{
    report_json j;
    j["group"] = r.group.spec();
    j["eq"] = to_string(r.eq);
    j["k"] = r.k;
    j["extended"] = r.extended;
    j["ambient"] = r.extended ? "jets of theta(f), degrees 0..k" : "jets of m_n theta(f), degrees 1..k";
    j["ambient_dim"] = r.ambient_dim;
    j["tf_dim"] = r.tf_dim;
    j["group_part_dim"] = r.omega_dim;
    j["g_of_f_dim"] = r.g_of_f_dim;
    j["tangent_dim"] = r.tangent_dim;
    j["codim"] = r.codim;
    j["codim_previous"] = r.codim_previous ? report_json(*r.codim_previous) : report_json(nullptr);
    j["stabilized"] = r.stabilized;
    j["stabilized_note"] = "equal codim at orders k-1 and k; heuristic, not a determinacy certificate";
    return j;
}

inline report_json to_json(const moduli_report &r)
{
    report_json j;
    j["pair"] = to_string(r.pair);
    j["group"] = r.group.spec();
    j["subgroup"] = r.subgroup ? report_json(r.subgroup->spec()) : report_json(nullptr);
    j["k"] = r.k;
    j["extended"] = r.extended;
    j["larger_dim"] = r.larger_dim;
    j["smaller_dim"] = r.smaller_dim;
    j["dim"] = r.dim;
    j["bound"] = r.bound ? report_json(*r.bound) : report_json(nullptr);
    j["group_part_quotient"] = r.group_part_quotient;
    j["intersection_quotient"] = r.intersection_quotient;
    j["exact_sequence_ok"] = r.exact_sequence_ok;
    j["subspaces_equal"] = r.subspaces_equal;
    return j;
}

inline report_json to_json(const rigidity_report &r)
{
    report_json j;
    j["group"] = r.group.spec();
    j["k"] = r.k;
    j["linearity"] = to_json(r.linearity);
    j["germs"] = report_json::array();
    for (const auto &row : r.rows) {
        j["germs"].push_back({{"germ", row.germ}, {"tangent_equal", row.tangent_equal}, {"moduli_dim", row.moduli_dim}});
    }
    j["consistent"] = r.consistent;
    return j;
}

inline report_json to_json(const growth_report &r)
{
    report_json j;
    j["codims"] = report_json::array();
    for (const auto &[k, c] : r.codims) {
        j["codims"].push_back({{"k", k}, {"codim", c}});
    }
    j["strictly_increasing"] = r.strictly_increasing;
    j["note"] = "finite-order evidence only";
    return j;
}

inline report_json to_json(const ak_normal_form &nf)
{
    report_json j;
    j["k"] = nf.k;
    j["sign"] = nf.sign;
    j["rotated"] = nf.rotated;
    j["h"] = series_json(nf.h);
    j["phi"] = series_json(nf.phi);
    j["residual"] = nf.residual;
    return j;
}

inline report_json to_json(const frontal_invariants &fr)
{
    report_json j;
    j["k"] = fr.k;
    j["sign"] = fr.sign;
    j["order"] = fr.order;
    j["mu"] = {series_json(fr.mu[0]), series_json(fr.mu[1])};
    j["nu"] = {series_json(fr.nu[0]), series_json(fr.nu[1])};
    j["ell"] = series_json(fr.ell);
    j["beta"] = series_json(fr.beta);
    j["ell_closed_form"] = series_json(fr.ell_closed);
    j["ell_reference"] = series_json(fr.ell_reference);
    j["beta_reference"] = series_json(fr.beta_reference);
    j["frenet_residual"] = fr.frenet_residual;
    j["orthonormality_residual"] = fr.orthonormality_residual;
    j["ell_vs_closed_form"] = fr.ell_vs_closed;
    j["ell_vs_reference"] = fr.ell_vs_reference;
    j["beta_vs_reference"] = fr.beta_vs_reference;
    return j;
}

inline report_json to_json(const congruence_result &c)
{
    report_json j;
    j["match"] = c.match;
    j["orientation"] = c.orientation;
    j["phi"] = c.match ? series_json(c.phi) : report_json(nullptr);
    j["residual"] = c.residual;
    j["obstruction_degree"] = c.obstruction_degree < 0 ? report_json(nullptr) : report_json(c.obstruction_degree);
    j["compared_order"] = c.compared_order;
    return j;
}

inline report_json to_json(const monge_form &m)
{
    report_json j;
    j["lambda1"] = m.lambda1;
    j["lambda2"] = m.lambda2;
    j["principal_curvatures"] = {m.principal_curvature(1), m.principal_curvature(2)};
    j["cubic"] = {{"a30", m.cubic[0]}, {"a21", m.cubic[1]}, {"a12", m.cubic[2]}, {"a03", m.cubic[3]}};
    report_json rot = report_json::array();
    for (unsigned i = 0; i < 3; ++i) {
        rot.push_back(m.rotation[i]);
    }
    j["rotation"] = rot;
    j["phi"] = map_json(m.phi);
    j["normal_form"] = map_json(m.normal_form);
    j["residual"] = m.residual;
    return j;
}

namespace detail
{

inline std::string scalar_text(const report_json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        std::ostringstream os;
        os << std::setprecision(10) << v.get<double>();
        return os.str();
    }
    return v.dump();
}

inline bool is_scalar_array(const report_json &v)
{
    for (const auto &x : v) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

inline bool is_record_array(const report_json &v)
{
    if (v.empty()) {
        return false;
    }
    for (const auto &x : v) {
        if (!x.is_object()) {
            return false;
        }
    }
    return true;
}

inline void table_lines(std::ostream &os, const report_json &j, const std::string &prefix);

inline void record_table(std::ostream &os, const report_json &rows, const std::string &title)
{
    std::vector<std::string> cols;
    for (const auto &row : rows) {
        for (const auto &[k, v] : row.items()) {
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) {
                cols.push_back(k);
            }
        }
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto &c : cols) {
        width.push_back(c.size());
    }
    for (const auto &row : rows) {
        std::vector<std::string> r;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto text = row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "";
            width[i] = std::max(width[i], text.size());
            r.push_back(text);
        }
        cells.push_back(std::move(r));
    }
    os << title << ":\n";
    auto line = [&](const std::vector<std::string> &r) {
        os << " ";
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << " " << std::left << std::setw(static_cast<int>(width[i])) << r[i];
        }
        os << "\n";
    };
    line(cols);
    for (const auto &r : cells) {
        line(r);
    }
}

inline void table_lines(std::ostream &os, const report_json &j, const std::string &prefix)
{
    for (const auto &[k, v] : j.items()) {
        const auto key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object()) {
            table_lines(os, v, key);
        } else if (v.is_array() && is_record_array(v)) {
            record_table(os, v, key);
        } else if (v.is_array() && is_scalar_array(v)) {
            std::string s;
            for (const auto &x : v) {
                s += (s.empty() ? "" : ", ") + scalar_text(x);
            }
            os << key << ": [" << s << "]\n";
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                report_json wrap;
                wrap[std::to_string(i)] = v[i];
                table_lines(os, wrap, key);
            }
        } else {
            os << key << ": " << scalar_text(v) << "\n";
        }
    }
}

} // namespace detail

enum class output_format { json, table };

inline void emit(std::ostream &os, const report_json &j, output_format fmt)
{
    if (fmt == output_format::json) {
        os << j.dump(2) << "\n";
    } else {
        detail::table_lines(os, j, "");
    }
}

} // namespace germlab

#endif
