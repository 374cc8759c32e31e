// specseq: exact Mackey-functor calculator for finite groups.
// Subcommands cover group data, character tables, tables of marks, hom groups
// of the Burnside-Bouc category, Mackey module checking, Ext/Tor tables,
// UCT/Kunneth E2 pages, Brauer/Artin reports and the verification corpus.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "specseq/corpus.hpp"
#include "specseq/parallel.hpp"

using namespace specseq;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- G-set literals: G/G, G/1, G/[i,j,...], products '*', unions '+' ----

struct GSetParser {
    const FiniteGroup& g;
    std::string s;
    std::size_t pos = 0;

    explicit GSetParser(const FiniteGroup& grp, std::string text) : g(grp), s(std::move(text)) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    GSet parse() {
        GSet v = expr();
        skip();
        if (pos != s.size()) throw InputError("G-set literal: trailing characters at position " + std::to_string(pos));
        return v;
    }

    GSet expr() {
        GSet v = term();
        while (eat('+')) v = GSet::disjoint_union(v, term());
        return v;
    }

    GSet term() {
        GSet v = atom();
        while (eat('*')) v = GSet::product(v, atom());
        return v;
    }

    GSet atom() {
        skip();
        if (eat('(')) {
            GSet v = expr();
            if (!eat(')')) throw InputError("G-set literal: missing ')'");
            return v;
        }
        if (pos < s.size() && s[pos] == '0') {
            ++pos;
            return GSet::empty(g);
        }
        if (s.compare(pos, 2, "G/") != 0) throw InputError("G-set literal: expected 'G/...' at position " + std::to_string(pos));
        pos += 2;
        if (pos < s.size() && s[pos] == 'G') {
            ++pos;
            return GSet::point(g);
        }
        if (pos < s.size() && s[pos] == '1') {
            ++pos;
            return GSet::free_orbit(g);
        }
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            std::vector<int> gens;
            while (true) {
                skip();
                std::size_t start = pos;
                while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) ++pos;
                if (start == pos) throw InputError("G-set literal: expected element index");
                gens.push_back(std::stoi(s.substr(start, pos - start)));
                skip();
                if (eat(']')) break;
                if (!eat(',')) throw InputError("G-set literal: expected ',' or ']'");
            }
            for (int e : gens)
                if (e < 0 || e >= g.order()) throw InputError("G-set literal: element index out of range");
            return GSet::orbit(g, g.subgroup_generated(gens));
        }
        throw InputError("G-set literal: expected G, 1 or [generators] after 'G/'");
    }
};

GSet parse_gset(const FiniteGroup& g, const std::string& text) { return GSetParser(g, text).parse(); }

// ---- module references: R, R[<gset>], 0, or a JSON file path ----

GradedMackeyModule resolve_module(const FiniteGroup& g, const std::string& ref, std::string* name_out) {
    const GreenFunctor& r = GreenFunctor::representation(g);
    if (name_out) *name_out = ref;
    if (ref == "R") return GradedMackeyModule::concentrated(unit_module(r), 0);
    if (ref == "0") return GradedMackeyModule{{zero_module(r), zero_module(r)}};
    if (ref.size() > 2 && ref.front() == 'R' && ref[1] == '[' && ref.back() == ']')
        return GradedMackeyModule::concentrated(representable(r, parse_gset(g, ref.substr(2, ref.size() - 3))), 0);
    if (ref.size() > 5 && ref.substr(ref.size() - 5) == ".json")
        return module_from_json_with_group(read_file(ref), g, name_out, true);
    throw InputError("unknown module reference '" + ref + "' (use R, R[<gset>], 0, or a .json file)");
}

std::unique_ptr<FiniteGroup> make_group(const std::string& spec, int order_cap) {
    auto g = std::make_unique<FiniteGroup>(FiniteGroup::preset(spec));
    g->set_order_cap(order_cap);
    return g;
}

void print_invariant_table(const std::string& label, const std::array<AbInvariants, 2>& cell, std::size_t row) {
    std::cout << "  " << label << row << "  deg0: " << cell[0].str() << "   deg1: " << cell[1].str() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"specseq: exact Mackey-module spectral sequence calculator"};
    app.require_subcommand(1);
    std::size_t threads = 1;
    int order_cap = 64;
    app.add_option("--threads", threads, "worker threads for independent cells");
    app.add_option("--order-cap", order_cap, "maximum group order for subgroup enumeration");

    std::string gspec, xlit, ylit, mref, nref, jsonfile, file;
    int maxp = 3, maxlen = 3;
    std::uint64_t seed = 20240601;
    std::vector<std::string> group_list;

    auto* ginfo = app.add_subcommand("group", "group data");
    auto* ginfo_info = ginfo->add_subcommand("info", "order, exponent, subgroup classes, flags");
    ginfo_info->add_option("spec", gspec)->required();

    auto* chart = app.add_subcommand("chartable", "exact character table");
    chart->add_option("spec", gspec)->required();
    chart->add_option("--json", jsonfile, "export as JSON");

    auto* tom = app.add_subcommand("tom", "table of marks");
    tom->add_option("spec", gspec)->required();

    auto* bouc = app.add_subcommand("bouc", "Burnside-Bouc category");
    auto* bouc_hom = bouc->add_subcommand("hom", "hom-group basis of B(X, Y)");
    bouc_hom->add_option("X", xlit)->required();
    bouc_hom->add_option("Y", ylit)->required();
    bouc_hom->add_option("--group", gspec)->required();

    auto* module = app.add_subcommand("module", "Mackey module files");
    auto* module_check = module->add_subcommand("check", "run the axiom checker on a module file");
    module_check->add_option("file", file)->required();
    auto* module_show = module->add_subcommand("show", "pretty-print a module");
    module_show->add_option("ref", mref)->required();
    module_show->add_option("--group", gspec)->required();

    auto* hom = app.add_subcommand("hom", "hom group of two modules");
    hom->add_option("M", mref)->required();
    hom->add_option("N", nref)->required();
    hom->add_option("--group", gspec)->required();

    auto* ext = app.add_subcommand("ext", "graded Ext table");
    ext->add_option("M", mref)->required();
    ext->add_option("N", nref)->required();
    ext->add_option("--group", gspec)->required();
    ext->add_option("--max-p", maxp);

    auto* tor = app.add_subcommand("tor", "graded Tor table");
    tor->add_option("M", mref)->required();
    tor->add_option("N", nref)->required();
    tor->add_option("--group", gspec)->required();
    tor->add_option("--max-p", maxp);

    auto* e2 = app.add_subcommand("e2", "spectral sequence E2 pages");
    auto* e2uct = e2->add_subcommand("uct", "universal-coefficient page");
    auto* e2kt = e2->add_subcommand("kunneth", "Kunneth page");
    for (auto* cmd : {e2uct, e2kt}) {
        cmd->add_option("M", mref)->required();
        cmd->add_option("N", nref)->required();
        cmd->add_option("--group", gspec)->required();
        cmd->add_option("--max-p", maxp);
        cmd->add_option("--json", jsonfile);
    }

    auto* resolve_cmd = app.add_subcommand("resolve", "projective resolution summary");
    resolve_cmd->add_option("M", mref)->required();
    resolve_cmd->add_option("--group", gspec)->required();
    resolve_cmd->add_option("--max-len", maxlen);

    auto* brauer = app.add_subcommand("brauer-check", "Brauer induction surjectivity");
    brauer->add_option("spec", gspec)->required();
    brauer->add_option("--json", jsonfile);
    auto* artin = app.add_subcommand("artin-check", "Artin rational rank");
    artin->add_option("spec", gspec)->required();
    artin->add_option("--json", jsonfile);

    auto* corpus = app.add_subcommand("corpus", "verification corpus");
    auto* corpus_run = corpus->add_subcommand("run", "run the acceptance corpus");
    corpus_run->add_option("--seed", seed);
    corpus_run->add_option("--groups", group_list, "preset names (default: the full list)")->delimiter(',');

    CLI11_PARSE(app, argc, argv);
    set_thread_count(threads);

    if (*ginfo_info) {
        auto g = make_group(gspec, order_cap);
        std::cout << g->describe() << "\n";
        const auto& cls = g->subgroup_classes();
        std::cout << cls.size() << " subgroup classes:\n";
        for (std::size_t i = 0; i < cls.size(); ++i) {
            std::cout << "  class " << i << ": order " << cls[i].rep.order() << ", " << cls[i].members.size()
                      << " conjugate(s)" << (cls[i].is_cyclic ? ", cyclic" : "")
                      << (cls[i].is_elementary ? ", elementary" : "") << "\n";
        }
    } else if (*chart) {
        auto g = make_group(gspec, order_cap);
        const FiniteGroup& full = g->materialize(g->full_subgroup());
        const char* cachedir = std::getenv("SPECSEQ_CACHE_DIR");
        std::string cachefile;
        if (cachedir) cachefile = std::string(cachedir) + "/" + gspec + "-chartable.json";
        const CharacterTable* t = nullptr;
        LoadedCharTable loaded;
        if (cachedir) {
            try {
                loaded = chartable_from_json(read_file(cachefile));
                t = loaded.table.get();
            } catch (...) {
                t = nullptr;
            }
        }
        if (!t) {
            t = &CharacterTable::of(full);
            if (cachedir) write_file(cachefile, chartable_to_json(*t));
        }
        std::cout << "character table of " << gspec << " (conductor " << t->conductor() << ")\n";
        for (std::size_t i = 0; i < t->nchars(); ++i) {
            std::cout << "  chi" << i << " (deg " << t->degree(i).get_str() << "):";
            for (std::size_t c = 0; c < t->nclasses(); ++c) std::cout << "  " << t->value(i, c).str();
            std::cout << "\n";
        }
        if (!jsonfile.empty()) write_file(jsonfile, chartable_to_json(*t));
    } else if (*tom) {
        auto g = make_group(gspec, order_cap);
        const FiniteGroup& full = g->materialize(g->full_subgroup());
        const BurnsideRing& b = BurnsideRing::of(full);
        std::cout << "table of marks of " << gspec << " (rows [G/L], columns K)\n";
        for (std::size_t i = 0; i < b.rank(); ++i) {
            std::cout << "  ";
            for (std::size_t j = 0; j < b.rank(); ++j) std::cout << b.marks.at(i, j).get_str() << (j + 1 < b.rank() ? " " : "");
            std::cout << "\n";
        }
    } else if (*bouc_hom) {
        auto g = make_group(gspec, order_cap);
        const GreenFunctor& r = GreenFunctor::representation(*g);
        GSet x = parse_gset(*g, xlit), y = parse_gset(*g, ylit);
        auto labels = bouc_basis_labels(r, x, y);
        std::cout << "B(" << xlit << ", " << ylit << ") over " << gspec << ": rank " << labels.size() << "\n";
        for (std::size_t i = 0; i < labels.size(); ++i) std::cout << "  e" << i << " = " << labels[i] << "\n";
    } else if (*module_check) {
        LoadedModule lm = module_from_json(read_file(file));  // throws on axiom failure
        std::cout << "module '" << lm.name << "' over " << lm.group->name() << ": axioms pass\n";
    } else if (*module_show) {
        auto g = make_group(gspec, order_cap);
        std::string name;
        GradedMackeyModule m = resolve_module(*g, mref, &name);
        std::cout << "module " << name << " over " << gspec << "\n";
        for (int d = 0; d < 2; ++d) {
            std::cout << "  degree " << d << ": ";
            for (std::size_t i = 0; i < m.part[d].nclasses(); ++i)
                std::cout << (i ? ", " : "") << "M[" << i << "]=" << m.part[d].level(i).str();
            std::cout << "\n";
        }
    } else if (*hom) {
        auto g = make_group(gspec, order_cap);
        GradedMackeyModule m = resolve_module(*g, mref, nullptr);
        GradedMackeyModule n = resolve_module(*g, nref, nullptr);
        for (int d = 0; d < 2; ++d) {
            ModuleHomGroup hg = hom_modules(m.part[d], n.part[d]);
            std::cout << "Hom degree " << d << ": " << hg.group.str() << " (" << hg.generators.size()
                      << " generators)\n";
        }
    } else if (*ext) {
        auto g = make_group(gspec, order_cap);
        GradedExtTable t = ext_modules(resolve_module(*g, mref, nullptr), resolve_module(*g, nref, nullptr), maxp);
        std::cout << "Ext over " << gspec << (t.complete ? "" : " [truncated]") << "\n";
        for (std::size_t n = 0; n < t.cells.size(); ++n) print_invariant_table("Ext^", t.cells[n], n);
    } else if (*tor) {
        auto g = make_group(gspec, order_cap);
        GradedTorTable t = tor_modules(resolve_module(*g, mref, nullptr), resolve_module(*g, nref, nullptr), maxp);
        std::cout << "Tor over " << gspec << (t.complete ? "" : " [truncated]") << "\n";
        std::size_t top = g->subgroup_classes().size() - 1;
        for (std::size_t n = 0; n < t.cells.size(); ++n) {
            std::array<AbInvariants, 2> cell{t.cells[n][0].empty() ? AbInvariants{} : t.cells[n][0][top],
                                             t.cells[n][1].empty() ? AbInvariants{} : t.cells[n][1][top]};
            print_invariant_table("Tor_", cell, n);
        }
    } else if (*e2uct || *e2kt) {
        auto g = make_group(gspec, order_cap);
        GradedMackeyModule m = resolve_module(*g, mref, nullptr);
        GradedMackeyModule n = resolve_module(*g, nref, nullptr);
        E2Page page = *e2uct ? uct_e2(m, n, maxp) : kunneth_e2(m, n, maxp);
        std::cout << page.str();
        if (!jsonfile.empty()) write_file(jsonfile, e2page_to_json(page));
    } else if (*resolve_cmd) {
        auto g = make_group(gspec, order_cap);
        GradedMackeyModule m = resolve_module(*g, mref, nullptr);
        for (int d = 0; d < 2; ++d) {
            Resolution res = resolve(m.part[d], maxlen);
            std::cout << "degree " << d << ": ";
            if (res.complete)
                std::cout << "complete, projective dimension " << res.projective_dimension << "\n";
            else
                std::cout << "truncated at length " << maxlen << "\n";
            for (std::size_t k = 0; k < res.steps.size(); ++k) {
                std::cout << "  P_" << k << " =";
                if (res.steps[k].summand_cls.empty()) std::cout << " 0";
                for (std::size_t cls : res.steps[k].summand_cls) std::cout << " R[G/class" << cls << "]";
                std::cout << "\n";
            }
            ExactnessReport cert = certify_resolution(res);
            std::cout << "  d.d = 0: " << (cert.dd_zero ? "yes" : "NO") << ", levelwise exact: "
                      << (cert.exact ? "yes" : "NO") << "\n";
            if (!cert.pass()) return 1;
        }
    } else if (*brauer || *artin) {
        auto g = make_group(gspec, order_cap);
        InductionReport rep = *brauer ? brauer_surjectivity(*g) : artin_rank(*g);
        std::cout << (*brauer ? "Brauer" : "Artin") << " report for " << gspec << ": " << rep.str() << "\n";
        if (!jsonfile.empty())
            write_file(jsonfile, induction_report_to_json(rep, *brauer ? "brauer-report" : "artin-report", gspec));
        bool ok = *brauer ? rep.surjective() : rep.full_rank();
        if (!ok) return 1;
    } else if (*corpus_run) {
        CorpusOptions opt;
        opt.seed = seed;
        if (!group_list.empty()) opt.groups = group_list;
        auto results = run_corpus(opt, std::cout);
        if (!corpus_all_pass(results, std::cout)) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
