#include "specseq/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace specseq {

using nlohmann::json;

namespace {

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

IntMatrix matrix_from_json(const json& j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    IntMatrix m(rows, cols);
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::runtime_error("matrix: row count mismatch at 'entries'");
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::runtime_error("matrix: column count mismatch at row " + std::to_string(i));
        for (std::size_t jx = 0; jx < cols; ++jx) m.at(i, jx) = Int(entries[i][jx].get<std::string>());
    }
    return m;
}

json invariants_to_json(const AbInvariants& inv) {
    json t = json::array();
    for (const auto& x : inv.torsion) t.push_back(x.get_str());
    return json{{"rank", inv.free_rank}, {"torsion", std::move(t)}};
}

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
    json out;
    out["name"] = g.name();
    json table = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    out["table"] = std::move(table);
    return out.dump();
}

namespace {

std::unique_ptr<FiniteGroup> group_from_json_obj(const json& j) {
    if (j.contains("preset")) return std::make_unique<FiniteGroup>(FiniteGroup::preset(j.at("preset").get<std::string>()));
    if (j.contains("perm")) {
        const json& p = j.at("perm");
        std::vector<std::vector<int>> gens;
        for (const auto& gperm : p.at("gens")) gens.push_back(gperm.get<std::vector<int>>());
        return std::make_unique<FiniteGroup>(FiniteGroup::from_permutations(
            p.at("points").get<int>(), gens, j.value("name", std::string("perm-group"))));
    }
    if (j.contains("table")) {
        std::vector<std::vector<int>> table;
        for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
        return std::make_unique<FiniteGroup>(FiniteGroup::from_table(std::move(table), j.value("name", std::string("group"))));
    }
    throw std::runtime_error("group: expected one of 'preset', 'perm', 'table'");
}

}  // namespace

std::unique_ptr<FiniteGroup> group_from_json(const std::string& text) {
    return group_from_json_obj(json::parse(text));
}

std::string chartable_to_json(const CharacterTable& t) {
    json out;
    out["format_version"] = 1;
    out["kind"] = "character-table";
    out["group"] = json::parse(group_to_json(t.group()));
    out["conductor"] = t.conductor();
    json classes = json::array(), sizes = json::array();
    for (std::size_t c = 0; c < t.nclasses(); ++c) {
        classes.push_back(t.class_rep(c));
        sizes.push_back(t.class_size(c));
    }
    out["class_representatives"] = std::move(classes);
    out["class_sizes"] = std::move(sizes);
    json irr = json::array();
    for (std::size_t i = 0; i < t.nchars(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < t.nclasses(); ++c) {
            json coeffs = json::array();
            for (const auto& x : t.value(i, c).coeffs()) coeffs.push_back(x.get_str());
            row.push_back(std::move(coeffs));
        }
        irr.push_back(std::move(row));
    }
    out["irreducibles"] = std::move(irr);
    return out.dump(2);
}

LoadedCharTable chartable_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("kind", "") != "character-table") throw std::runtime_error("chartable: wrong 'kind'");
    LoadedCharTable out;
    out.group = group_from_json_obj(j.at("group"));
    unsigned long conductor = j.at("conductor").get<unsigned long>();
    std::vector<std::vector<CycInt>> values;
    for (const auto& row : j.at("irreducibles")) {
        std::vector<CycInt> vrow;
        for (const auto& cell : row) {
            CycInt v(conductor);
            IntVec coeffs;
            for (const auto& c : cell) coeffs.push_back(Int(c.get<std::string>()));
            if (coeffs.size() != euler_phi(conductor)) throw std::runtime_error("chartable: coefficient length mismatch");
            CycInt acc(conductor);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) acc = acc + CycInt::zeta_power(conductor, i).scaled(coeffs[i]);
            v = acc;
            vrow.push_back(v);
        }
        values.push_back(std::move(vrow));
    }
    out.table = std::make_unique<CharacterTable>(*out.group, conductor, std::move(values));
    return out;
}

namespace {

json level_to_json(const PresentedAbGroup& g) {
    return json{{"ngens", g.ngens()}, {"relations", matrix_to_json(g.relations())}};
}

PresentedAbGroup level_from_json(const json& j) {
    return PresentedAbGroup(j.at("ngens").get<std::size_t>(), matrix_from_json(j.at("relations")));
}

json degree_to_json(const MackeyModule& m) {
    const FiniteGroup& g = m.group();
    const auto& classes = g.subgroup_classes();
    json levels = json::array();
    for (std::size_t i = 0; i < m.nclasses(); ++i) levels.push_back(level_to_json(m.level(i)));
    json maps = json::array();
    for (std::size_t i = 0; i < m.nclasses(); ++i) {
        const auto& cd = m.class_data(i);
        const WeylData& w = g.weyl(classes[i].rep);
        for (int gen : w.generators) {
            maps.push_back(json{{"kind", "conj"},
                                {"class", i},
                                {"generator", gen},
                                {"matrix", matrix_to_json(cd.conj[w.coset_of[gen]])}});
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            maps.push_back(json{{"kind", "res"},
                                {"class", i},
                                {"slot", tbl.slot_sub.at(key).elems},
                                {"matrix", matrix_to_json(cd.res.at(key))}});
            maps.push_back(json{{"kind", "ind"},
                                {"class", i},
                                {"slot", tbl.slot_sub.at(key).elems},
                                {"matrix", matrix_to_json(cd.ind.at(key))}});
        }
        for (std::size_t b = 0; b < cd.action.size(); ++b)
            maps.push_back(json{{"kind", "action"}, {"class", i}, {"basis", b}, {"matrix", matrix_to_json(cd.action[b])}});
    }
    return json{{"levels", std::move(levels)}, {"maps", std::move(maps)}};
}

MackeyModule degree_from_json(const json& j, const GreenFunctor& r) {
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    std::vector<MackeyModule::ClassData> data(classes.size());
    const json& levels = j.at("levels");
    if (levels.size() != classes.size()) throw std::runtime_error("module: 'levels' must have one entry per subgroup class");
    for (std::size_t i = 0; i < classes.size(); ++i) data[i].level = level_from_json(levels[i]);

    // collect declared maps
    std::vector<std::map<int, IntMatrix>> conj_gens(classes.size());
    for (const auto& mp : j.at("maps")) {
        std::string kind = mp.at("kind").get<std::string>();
        std::size_t cls = mp.at("class").get<std::size_t>();
        if (cls >= classes.size()) throw std::runtime_error("module: map entry names an unknown class");
        IntMatrix mat = matrix_from_json(mp.at("matrix"));
        if (kind == "conj") {
            conj_gens[cls][mp.at("generator").get<int>()] = std::move(mat);
        } else if (kind == "res" || kind == "ind") {
            Subgroup s{&g, mp.at("slot").get<std::vector<int>>()};
            std::sort(s.elems.begin(), s.elems.end());
            const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(cls));
            if (!tbl.slot_sub.count(s.key()))
                throw std::runtime_error("module: slot " + s.key() + " is not a canonical subconjugate of class " +
                                         std::to_string(cls));
            if (kind == "res")
                data[cls].res.emplace(s.key(), std::move(mat));
            else
                data[cls].ind.emplace(s.key(), std::move(mat));
        } else if (kind == "action") {
            std::size_t b = mp.at("basis").get<std::size_t>();
            if (data[cls].action.size() <= b) data[cls].action.resize(b + 1, IntMatrix(0, 0));
            data[cls].action[b] = std::move(mat);
        } else {
            throw std::runtime_error("module: unknown map kind '" + kind + "'");
        }
    }

    // reconstruct the full Weyl coset tables from the generator matrices
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const WeylData& w = g.weyl(classes[i].rep);
        std::size_t n = data[i].level.ngens();
        std::vector<IntMatrix> table(w.coset_reps.size(), IntMatrix(0, 0));
        std::vector<char> known(w.coset_reps.size(), 0);
        table[0] = IntMatrix::identity(n);
        known[0] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t c = 0; c < table.size(); ++c) {
                if (!known[c]) continue;
                for (const auto& [gen, mat] : conj_gens[i]) {
                    int target = w.coset_of[g.mul(gen, w.coset_reps[c])];
                    if (target < 0) throw std::runtime_error("module: conj generator not in the normalizer");
                    if (!known[target]) {
                        table[target] = mat * table[c];
                        known[target] = 1;
                        grew = true;
                    }
                }
            }
        }
        for (std::size_t c = 0; c < table.size(); ++c)
            if (!known[c]) throw std::runtime_error("module: conj generators do not span the Weyl group of class " +
                                                    std::to_string(i));
        data[i].conj = std::move(table);
        std::size_t rk = r.rank(classes[i].rep);
        if (data[i].action.size() != rk)
            throw std::runtime_error("module: class " + std::to_string(i) + " needs " + std::to_string(rk) +
                                     " action matrices");
    }
    return MackeyModule(r, std::move(data));
}

}  // namespace

std::string module_to_json(const GradedMackeyModule& m, const std::string& name) {
    json out;
    out["format_version"] = 1;
    out["kind"] = "mackey-module";
    out["name"] = name;
    out["group"] = json::parse(group_to_json(m.group()));
    out["functor"] = m.part[0].functor().tag();
    out["graded"] = true;
    out["degrees"] = json::array({degree_to_json(m.part[0]), degree_to_json(m.part[1])});
    return out.dump(2);
}

GradedMackeyModule module_from_json_with_group(const std::string& text, const FiniteGroup& g, std::string* name_out,
                                               bool check) {
    json j = json::parse(text);
    if (j.value("kind", "") != "mackey-module") throw std::runtime_error("module: wrong 'kind'");
    if (name_out) *name_out = j.value("name", "module");
    std::string functor = j.value("functor", "representation");
    const GreenFunctor& r =
        functor == "burnside" ? GreenFunctor::burnside(g) : GreenFunctor::representation(g);
    const json& degrees = j.at("degrees");
    GradedMackeyModule m;
    m.part[0] = degree_from_json(degrees.at(0), r);
    m.part[1] = degrees.size() > 1 ? degree_from_json(degrees.at(1), r) : zero_module(r);
    if (check) {
        AxiomReport rep = m.check_axioms();
        if (!rep.pass())
            throw std::runtime_error("module rejected by the axiom checker: " + rep.failures[0].identity + " @ " +
                                     rep.failures[0].instance);
    }
    return m;
}

LoadedModule module_from_json(const std::string& text) {
    json j = json::parse(text);
    LoadedModule out;
    out.group = group_from_json_obj(j.at("group"));
    out.module = module_from_json_with_group(text, *out.group, &out.name, true);
    return out;
}

std::string e2page_to_json(const E2Page& page) {
    json out;
    out["format_version"] = 1;
    out["kind"] = "e2-page";
    out["page"] = page.kind == E2Page::Kind::UCT ? "uct" : "kunneth";
    out["group"] = page.group;
    out["p_max"] = page.p_max;
    out["truncated"] = page.truncated;
    if (!page.truncated) out["projective_dimension"] = page.projective_dimension;
    out["collapse"] = page.collapse;
    json cells = json::array();
    for (std::size_t p = 0; p < page.cells.size(); ++p)
        for (int q = 0; q < 2; ++q) {
            json cell = invariants_to_json(page.cells[p][q]);
            cell["p"] = p;
            cell["q"] = q;
            if (!page.levelwise.empty()) {
                json lv = json::array();
                for (const auto& inv : page.levelwise[p][q]) lv.push_back(invariants_to_json(inv));
                cell["levels"] = std::move(lv);
            }
            cells.push_back(std::move(cell));
        }
    out["cells"] = std::move(cells);
    return out.dump(2);
}

std::string induction_report_to_json(const InductionReport& rep, const std::string& which, const std::string& group) {
    json out;
    out["format_version"] = 1;
    out["kind"] = which;
    out["group"] = group;
    out["classes"] = rep.source_classes;
    out["matrix"] = matrix_to_json(rep.matrix);
    out["cokernel"] = invariants_to_json(rep.cokernel);
    out["rank"] = rep.rank;
    out["target_rank"] = rep.target_rank;
    out["surjective"] = rep.surjective();
    out["full_rank"] = rep.full_rank();
    return out.dump(2);
}

std::string vanishing_report_to_json(const VanishingReport& rep, const std::string& group) {
    json out;
    out["format_version"] = 1;
    out["kind"] = "vanishing-report";
    out["group"] = group;
    out["elementary_levels_zero"] = rep.elementary_levels_zero;
    out["module_zero"] = rep.module_zero;
    out["rational_cyclic_levels_zero"] = rep.rational_cyclic_levels_zero;
    out["rational_module_zero"] = rep.rational_module_zero;
    out["consistent"] = rep.consistent();
    return out.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    out.flush();
}

}  // namespace specseq
