#include "qcenter/json_io.hpp"

#include <json.hpp>

namespace qcenter {

using nlohmann::json;

namespace {

json weight_to_json(const WeightVector& w) {
    json a = json::array();
    for (int64_t c : w.coords) a.push_back(c);
    return a;
}

WeightVector weight_from_json(const json& a) {
    std::vector<int64_t> c;
    for (const auto& v : a) c.push_back(v.get<int64_t>());
    return WeightVector{c};
}

json levi_to_json(const std::vector<int>& levi) {
    json a = json::array();
    for (int i : levi) a.push_back(i + 1);
    return a;
}

std::vector<int> levi_from_json(const json& a) {
    std::vector<int> out;
    for (const auto& v : a) out.push_back(v.get<int>() - 1);
    return out;
}

json int_to_json(const Int& v) {
    // exact integers as strings above 2^53, plain numbers below
    if (v >= Int(-(1L << 53)) && v <= Int(1L << 53)) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

std::string isotypes_to_string(const std::map<WeightVector, int64_t>& iso) {
    if (iso.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [nu, mult] : iso) {
        if (!first) s += " + ";
        first = false;
        s += std::to_string(mult) + "\xC2\xB7L";
        s += nu.is_zero() ? "0" : nu.str();
    }
    return s;
}

std::string diamond_to_json(const HodgeDiamond& hd) {
    json j;
    j["schema"] = "qcenter.diamond/1";
    j["type"] = std::string(1, hd.type_letter);
    j["rank"] = hd.rank;
    j["levi"] = levi_to_json(hd.levi);
    j["dim_x"] = hd.dim_x;
    j["complete"] = hd.complete();
    json entries = json::array();
    for (const auto& [ij, iso] : hd.entries) {
        json e;
        e["i"] = ij.first;
        e["j"] = ij.second;
        e["degree"] = -(ij.first + ij.second);
        json isotypes = json::array();
        for (const auto& [nu, mult] : iso) {
            json one;
            one["nu"] = weight_to_json(nu);
            one["mult"] = mult;
            isotypes.push_back(one);
        }
        e["isotypes"] = isotypes;
        e["dim"] = int_to_json(hd.entry_dims.at(ij));
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["total"] = int_to_json(hd.total);
    return j.dump(2) + "\n";
}

HodgeDiamond diamond_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "qcenter.diamond/1")
        throw cache_error("unknown diamond schema");
    HodgeDiamond hd;
    hd.type_letter = j.at("type").get<std::string>().at(0);
    hd.rank = j.at("rank").get<int>();
    hd.levi = levi_from_json(j.at("levi"));
    hd.dim_x = j.at("dim_x").get<int>();
    for (const auto& e : j.at("entries")) {
        std::pair<int, int> ij{e.at("i").get<int>(), e.at("j").get<int>()};
        std::map<WeightVector, int64_t> iso;
        for (const auto& one : e.at("isotypes"))
            iso[weight_from_json(one.at("nu"))] = one.at("mult").get<int64_t>();
        hd.entries[ij] = std::move(iso);
    }
    hd.recompute_totals();
    return hd;
}

std::string diamond_to_markdown(const HodgeDiamond& hd, bool per_weight) {
    const int n = hd.dim_x;
    std::string out = "| h^{i,j} |";
    for (int s = 0; s <= n; ++s) out += " j-i=" + std::to_string(2 * s) + " |";
    out += "\n|---|";
    for (int s = 0; s <= n; ++s) out += "---|";
    out += "\n";
    for (int t = 0; t <= n; ++t) {
        out += "| i+j=" + std::to_string(2 * t) + " |";
        for (int s = 0; s <= n; ++s) {
            if (s > t) {
                out += "  |";
                continue;
            }
            auto it = hd.entries.find({t - s, t + s});
            if (it == hd.entries.end()) {
                out += " ? |";
                continue;
            }
            if (per_weight)
                out += " " + isotypes_to_string(it->second) + " |";
            else
                out += " " + hd.entry_dims.at({t - s, t + s}).get_str() + " |";
        }
        out += "\n";
    }
    out += "\ntotal: " + hd.total.get_str() + "\n";
    return out;
}

std::string diamond_to_csv(const HodgeDiamond& hd) {
    std::string out = "i,j,degree,dim,isotypes\n";
    for (const auto& [ij, iso] : hd.entries) {
        out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
               std::to_string(-(ij.first + ij.second)) + "," +
               hd.entry_dims.at(ij).get_str() + ",\"" + isotypes_to_string(iso) + "\"\n";
    }
    out += "total," + hd.total.get_str() + ",,,\n";
    return out;
}

namespace {

json class_to_json(const BlockClass& cls) {
    json c;
    c["kind"] = cls.kind;
    json levis = json::array();
    for (const auto& levi : cls.levis) levis.push_back(levi_to_json(levi));
    c["levis"] = levis;
    c["count"] = cls.count;
    if (cls.block_dim >= 0) c["block_dim"] = int_to_json(cls.block_dim);
    return c;
}

std::string levis_str(const BlockClass& cls) {
    std::string s;
    for (size_t t = 0; t < cls.levis.size(); ++t) {
        if (t) s += "~";
        s += "{";
        for (size_t k = 0; k < cls.levis[t].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(cls.levis[t][k] + 1);
        }
        s += "}";
    }
    return s;
}

}  // namespace

std::string census_to_json(const BlockCensus& census) {
    json j;
    j["schema"] = "qcenter.census/1";
    j["type"] = std::string(1, census.type_letter);
    j["rank"] = census.rank;
    j["l"] = census.l;
    if (!census.warning.empty()) j["warning"] = census.warning;
    json classes = json::array();
    for (const auto& cls : census.classes) classes.push_back(class_to_json(cls));
    j["classes"] = classes;
    j["num_weights"] = census.num_weights;
    j["num_orbits"] = census.num_orbits;
    if (census.total >= 0) j["total"] = int_to_json(census.total);
    if (census.catalan_total >= 0) j["catalan_total"] = int_to_json(census.catalan_total);
    return j.dump(2) + "\n";
}

std::string census_to_markdown(const BlockCensus& census) {
    std::string out = "| class | levi | count | block dim | contribution |\n|---|---|---|---|---|\n";
    for (const auto& cls : census.classes) {
        out += "| " + cls.kind + " | " + levis_str(cls) + " | " + std::to_string(cls.count) + " | ";
        if (cls.block_dim >= 0) {
            out += cls.block_dim.get_str() + " | " + Int(cls.block_dim * Int(cls.count)).get_str() +
                   " |\n";
        } else {
            out += "- | - |\n";
        }
    }
    out += "\nweights: " + std::to_string(census.num_weights) +
           ", orbits: " + std::to_string(census.num_orbits) + "\n";
    if (census.total >= 0) {
        out += "total: " + census.total.get_str() + "\n";
        if (census.catalan_total >= 0)
            out += "catalan: " + census.catalan_total.get_str() +
                   (census.catalan_total == census.total ? " (match)" : " (MISMATCH)") + "\n";
    }
    if (!census.warning.empty()) out += "warning: " + census.warning + "\n";
    return out;
}

std::string census_to_csv(const BlockCensus& census) {
    std::string out = "kind,levi,count,block_dim\n";
    for (const auto& cls : census.classes)
        out += cls.kind + ",\"" + levis_str(cls) + "\"," + std::to_string(cls.count) + "," +
               (cls.block_dim >= 0 ? cls.block_dim.get_str() : "") + "\n";
    if (census.total >= 0) out += "total,,," + census.total.get_str() + "\n";
    return out;
}

namespace {

json sparse_to_json(const SparseMat& m) {
    json a = json::array();
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col[c].terms) {
            json t = json::array();
            t.push_back(r);
            t.push_back(c);
            t.push_back(rat_to_string(v));
            a.push_back(t);
        }
    return a;
}

}  // namespace

std::string module_to_json(const WeightedBModule& e) {
    json j;
    j["schema"] = "qcenter.module/1";
    j["dim"] = e.dim();
    j["labels"] = e.labels;
    json ws = json::array();
    for (const auto& w : e.weights) ws.push_back(weight_to_json(w));
    j["weights"] = ws;
    json f;
    for (int b = 0; b < e.cb->num_pos; ++b)
        f[e.cb->label(e.cb->f_index(b))] = sparse_to_json(e.f_root_act[b]);
    j["f_actions"] = f;
    json ee;
    for (int i = 0; i < e.cb->rs.rank; ++i)
        ee[e.cb->label(e.cb->e_index(i))] = sparse_to_json(e.e_simple_act[i]);
    j["e_actions"] = ee;
    return j.dump(2) + "\n";
}

std::string bgg_to_json(const WeightedBModule& e, const WeightVector& nu) {
    const RootSystemData& rs = e.cb->rs;
    BggSkeleton sk = bgg_skeleton(*e.cb, nu);
    BGGComplexInstance cx = assemble_bgg_complex(e, nu);
    json j;
    j["schema"] = "qcenter.bgg/1";
    j["nu"] = weight_to_json(nu);
    json edges = json::array();
    for (const auto& edge : sk.edges) {
        json ej;
        ej["from_word"] = rs.weyl_elements[edge.from].reduced_word;
        ej["to_word"] = rs.weyl_elements[edge.to].reduced_word;
        json theta = json::array();
        for (const auto& [mono, c] : edge.theta.terms) {
            json t;
            t["exponents"] = mono;
            t["coeff"] = rat_to_string(c);
            theta.push_back(t);
        }
        ej["theta"] = theta;
        ej["scalar"] = rat_to_string(edge.scalar);
        edges.push_back(ej);
    }
    j["edges"] = edges;
    json terms = json::array();
    for (int len = 0; len <= cx.max_length(); ++len) {
        json t;
        t["length"] = len;
        t["dim"] = cx.term_dims[len];
        terms.push_back(t);
    }
    j["terms"] = terms;
    json diffs = json::array();
    for (int d = 1; d <= cx.max_length(); ++d) {
        json m;
        m["j"] = d;
        m["rows"] = cx.differentials[d].rows;
        m["cols"] = cx.differentials[d].cols;
        json entries = json::array();
        for (int r = 0; r < cx.differentials[d].rows; ++r)
            for (int c = 0; c < cx.differentials[d].cols; ++c)
                if (cx.differentials[d].at(r, c) != 0) {
                    json t = json::array();
                    t.push_back(r);
                    t.push_back(c);
                    t.push_back(rat_to_string(cx.differentials[d].at(r, c)));
                    entries.push_back(t);
                }
        m["entries"] = entries;
        diffs.push_back(m);
    }
    j["differentials"] = diffs;
    auto h = complex_cohomology(cx);
    j["cohomology"] = h;
    return j.dump(2) + "\n";
}

}  // namespace qcenter
