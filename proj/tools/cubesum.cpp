// cubesum: verify, enumerate, extend and generate CS-sets (integer
// multisets whose cube sum equals the square of their sum) from the
// command line. Exit codes: 0 success, 1 domain failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubesum/catalog.hpp"
#include "cubesum/enumerate.hpp"
#include "cubesum/extend.hpp"
#include "cubesum/families.hpp"
#include "cubesum/liouville.hpp"
#include "cubesum/multiset.hpp"
#include "cubesum/pell.hpp"

using json = nlohmann::json;
using namespace cubesum;

namespace {

// Accepts both the canonical JSON array literal and a bare comma list
// ("-8,-7,1,5,9"); output is always the canonical literal.
Multiset parse_set_argument(const std::string& text) {
    std::string trimmed = text;
    auto first = trimmed.find_first_not_of(" \t");
    if (first != std::string::npos && trimmed[first] != '[')
        trimmed = "[" + trimmed + "]";
    return parse_set_literal(trimmed);
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        out.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

json entries_json(const Multiset& m) {
    json a = json::array();
    for (const Int& e : m.entries()) a.push_back(e.str());
    return a;
}

json set_json(const CsSet& s) {
    return json{{"entries", entries_json(s.elements())},
                {"n", s.size()},
                {"sum", s.sum().str()},
                {"cube_sum", s.cube_sum().str()}};
}

struct Output {
    bool as_json = false;
    json doc;

    void line(const std::string& text) {
        if (!as_json) std::cout << text << '\n';
    }
    void finish() {
        if (as_json) std::cout << doc.dump(2) << '\n';
    }
};

std::string default_catalog_path() {
    if (const char* env = std::getenv("CUBESUM_CATALOG")) return env;
    return "catalog.jsonl";
}

Catalog load_or_empty(const std::string& path) {
    std::ifstream probe(path);
    if (!probe.good()) return Catalog{};
    return Catalog::load(path);
}

void pell_debug_pair(bool enabled, const Int& x, const Int& y) {
    if (enabled) std::cerr << "[" << x.str() << ", " << y.str() << "]\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CS-set toolkit: multisets of nonzero integers whose cube "
                 "sum equals the square of their sum"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string catalog_path = default_catalog_path();
    app.add_flag("--json", as_json, "emit one JSON document instead of text lines");
    app.add_option("--catalog", catalog_path,
                   "catalog file (default $CUBESUM_CATALOG or ./catalog.jsonl)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check the CS identity on a set");
    std::string verify_set;
    cmd_verify->add_option("--set", verify_set, "set literal, e.g. '[1,2,2,4]'")
        ->required();

    // ---- enumerate ----
    auto* cmd_enum = app.add_subcommand("enumerate", "all positive CS n-sets");
    SearchConfig enum_cfg;
    std::string enum_bound, enum_prefix;
    bool enum_count_only = false;
    cmd_enum->add_option("--n", enum_cfg.n, "set size")->required();
    cmd_enum->add_option("--bound", enum_bound, "element bound (default n^2)");
    cmd_enum->add_option("--prefix", enum_prefix, "fixed leading entries a,b,...");
    cmd_enum->add_flag("--count-only", enum_count_only, "print only the count");
    cmd_enum->add_flag("!--no-prune", enum_cfg.prune, "disable branch-and-bound");
    unsigned enum_threads = std::max(1u, std::thread::hardware_concurrency());
    cmd_enum->add_option("--threads", enum_threads, "worker count (1 = sequential)");

    // ---- zerosum-search ----
    auto* cmd_zs = app.add_subcommand("zerosum-search",
                                      "admissible zero-sum CS n-sets within a bound");
    ZeroSumSearchConfig zs_cfg;
    std::string zs_bound;
    cmd_zs->add_option("--n", zs_cfg.n, "set size")->required();
    cmd_zs->add_option("--bound", zs_bound, "maximum |entry|")->required();

    // ---- liouville ----
    auto* cmd_liou = app.add_subcommand("liouville", "divisor-tau CS-set of m");
    std::string liou_m;
    bool liou_factorization = false;
    cmd_liou->add_option("--m", liou_m, "positive integer")->required();
    cmd_liou->add_flag("--show-factorization", liou_factorization,
                       "print the prime factorization first");

    // ---- extend ----
    auto* cmd_ext = app.add_subcommand("extend", "extension options of a CS-set");
    std::string ext_set;
    bool ext_two = false, ext_all = false;
    cmd_ext->add_option("--set", ext_set, "set literal")->required();
    cmd_ext->add_flag("--two", ext_two, "two-entry extensions");
    cmd_ext->add_flag("--all-reps", ext_all, "apply every two-entry representation");

    // ---- chain ----
    auto* cmd_chain = app.add_subcommand("chain", "repeated single extension");
    std::string chain_set, chain_root = "pos";
    std::size_t chain_steps = 1;
    cmd_chain->add_option("--set", chain_set, "set literal")->required();
    cmd_chain->add_option("--steps", chain_steps, "number of steps")->required();
    cmd_chain->add_option("--root", chain_root, "pos|neg root choice")
        ->check(CLI::IsMember({"pos", "neg"}));

    // ---- gen ----
    auto* cmd_gen = app.add_subcommand("gen", "infinite-family generators");
    cmd_gen->require_subcommand(1);
    bool pell_debug = false;
    cmd_gen->add_flag("--pell-debug", pell_debug,
                      "print the Pell solutions used as JSON pairs (stderr)");

    auto* gen_prop7 = cmd_gen->add_subcommand("prop7", "zero-sum CS5 family");
    std::size_t prop7_count = 1;
    gen_prop7->add_option("--count", prop7_count, "members to emit")->required();

    auto* gen_chowla = cmd_gen->add_subcommand("chowla", "CS3/CS4 sets from triples");
    std::size_t chowla_count = 1;
    int chowla_n = 3;
    gen_chowla->add_option("--count", chowla_count, "sets to emit")->required();
    gen_chowla->add_option("--n", chowla_n, "3 or 4")->check(CLI::IsMember({3, 4}));

    auto* gen_frolov = cmd_gen->add_subcommand("frolov", "zero-sum sets from square pairs");
    std::string frolov_triple, frolov_tuple, frolov_c;
    std::optional<std::size_t> frolov_target;
    gen_frolov->add_option("--triple", frolov_triple, "Pythagorean triple a,b,c");
    gen_frolov->add_option("--tuple", frolov_tuple, "Pythagorean n-tuple x1,...,xn");
    gen_frolov->add_option("--c", frolov_c, "translation constant")->required();
    gen_frolov->add_option("--target", frolov_target, "required result size");

    auto* gen_distinct = cmd_gen->add_subcommand("distinct", "distinct CS n-set, n >= 5");
    std::size_t distinct_n = 5, distinct_index = 0;
    gen_distinct->add_option("--n", distinct_n, "set size >= 5")->required();
    gen_distinct->add_option("--index", distinct_index, "family index");

    // ---- catalog ----
    auto* cmd_cat = app.add_subcommand("catalog", "persist and query discovered sets");
    cmd_cat->require_subcommand(1);
    auto* cat_add = cmd_cat->add_subcommand("add", "verify and record a set");
    std::string cat_set, cat_source = "cli";
    std::vector<std::string> cat_tags;
    cat_add->add_option("--set", cat_set, "set literal")->required();
    cat_add->add_option("--tag", cat_tags, "tag (repeatable)");
    cat_add->add_option("--source", cat_source, "provenance note");
    auto* cat_list = cmd_cat->add_subcommand("list", "query records");
    std::optional<std::size_t> cat_n;
    std::optional<std::string> cat_tag;
    bool cat_zero_sum = false;
    cat_list->add_option("--n", cat_n, "filter by size");
    cat_list->add_option("--tag", cat_tag, "filter by tag");
    cat_list->add_flag("--zero-sum", cat_zero_sum, "only zero-sum records");

    // global flags (--json, --catalog, gen --pell-debug) may trail the
    // subcommand they apply to
    for (CLI::App* sub : {cmd_verify, cmd_enum, cmd_zs, cmd_liou, cmd_ext,
                          cmd_chain, cmd_gen, gen_prop7, gen_chowla, gen_frolov,
                          gen_distinct, cmd_cat, cat_add, cat_list})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    out.as_json = as_json;

    try {
        if (*cmd_verify) {
            CsSet s = verify_cs(parse_set_argument(verify_set));
            out.line(s.literal() + " sum=" + s.sum().str() +
                     " cube_sum=" + s.cube_sum().str());
            out.doc = set_json(s);
        } else if (*cmd_enum) {
            if (!enum_bound.empty()) enum_cfg.element_bound = parse_int(enum_bound);
            if (!enum_prefix.empty()) enum_cfg.prefix = parse_int_list(enum_prefix);
            enum_cfg.threads = enum_threads;
            EnumerationResult r = enumerate_positive(enum_cfg);
            if (enum_count_only) {
                out.line(std::to_string(r.sets.size()));
            } else {
                for (const CsSet& s : r.sets) out.line(s.literal());
            }
            out.doc = json{{"n", enum_cfg.n},
                           {"bound", r.bound_used.str()},
                           {"complete", r.complete},
                           {"count", r.sets.size()},
                           {"max_entry", r.max_entry.str()}};
            if (!enum_count_only) {
                json sets = json::array();
                for (const CsSet& s : r.sets) sets.push_back(entries_json(s.elements()));
                out.doc["sets"] = std::move(sets);
            }
        } else if (*cmd_zs) {
            zs_cfg.magnitude_bound = parse_int(zs_bound);
            std::vector<CsSet> sets = zero_sum_search(zs_cfg);
            for (const CsSet& s : sets) out.line(s.literal());
            json arr = json::array();
            for (const CsSet& s : sets) arr.push_back(entries_json(s.elements()));
            out.doc = json{{"n", zs_cfg.n},
                           {"bound", zs_cfg.magnitude_bound.str()},
                           {"count", sets.size()},
                           {"sets", std::move(arr)}};
        } else if (*cmd_liou) {
            Int m = parse_int(liou_m);
            json factors = json::array();
            if (liou_factorization || as_json) {
                std::string text = m.str() + " =";
                bool first = true;
                for (const auto& [p, e] : factorize(m)) {
                    text += (first ? " " : " * ") + p.str() +
                            (e > 1 ? "^" + std::to_string(e) : "");
                    first = false;
                    factors.push_back(json::array({p.str(), e}));
                }
                if (liou_factorization) out.line(text);
            }
            CsSet s = liouville_set(m);
            out.line(s.literal());
            out.doc = set_json(s);
            out.doc["m"] = m.str();
            if (!factors.empty()) out.doc["factorization"] = std::move(factors);
        } else if (*cmd_ext) {
            CsSet s = verify_cs(parse_set_argument(ext_set));
            if (!ext_two) {
                json options = json::array();
                for (const ExtensionOption& opt : extend_one(s)) {
                    std::string action = opt.action == ExtensionAction::append
                                             ? "append "
                                             : "delete ";
                    std::string operand = opt.action == ExtensionAction::append
                                              ? opt.z.str()
                                              : Int(-opt.z).str();
                    out.line(action + operand + " -> " + opt.result.literal() +
                             (opt.admissible ? "" : "  (inadmissible)"));
                    options.push_back(
                        {{"z", opt.z.str()},
                         {"action", opt.action == ExtensionAction::append
                                        ? "append"
                                        : "delete_negation"},
                         {"result", entries_json(opt.result)},
                         {"admissible", opt.admissible}});
                }
                out.doc = json{{"set", entries_json(s.elements())},
                               {"sum", s.sum().str()},
                               {"options", std::move(options)}};
            } else {
                std::vector<TwoExtensionRep> reps = two_extension_reps(s.sum());
                if (reps.empty())
                    throw NoExtension("2(2a+1) is not u^2 + v^2 + (u+v)^2 for sum " +
                                      s.sum().str());
                if (!ext_all) reps.resize(1);
                json applied = json::array();
                for (const TwoExtensionRep& rep : reps) {
                    CsSet next = extend_two(s, rep);
                    out.line("x=" + rep.x.str() + " y=" + rep.y.str() + " (u=" +
                             rep.u.str() + " v=" + rep.v.str() + ") -> " +
                             next.literal());
                    applied.push_back({{"u", rep.u.str()},
                                       {"v", rep.v.str()},
                                       {"x", rep.x.str()},
                                       {"y", rep.y.str()},
                                       {"result", entries_json(next.elements())}});
                }
                out.doc = json{{"set", entries_json(s.elements())},
                               {"sum", s.sum().str()},
                               {"extensions", std::move(applied)}};
            }
        } else if (*cmd_chain) {
            CsSet s = verify_cs(parse_set_argument(chain_set));
            RootChoice root = chain_root == "pos" ? RootChoice::positive
                                                  : RootChoice::negative;
            std::vector<CsSet> steps = chain(s, chain_steps, root);
            json arr = json::array();
            for (const CsSet& step : steps) {
                out.line(step.literal());
                arr.push_back(entries_json(step.elements()));
            }
            out.doc = json{{"start", entries_json(s.elements())},
                           {"root", chain_root},
                           {"steps", std::move(arr)}};
        } else if (*gen_prop7) {
            json members = json::array();
            for (const Prop7Member& m : prop7_family_members(prop7_count)) {
                pell_debug_pair(pell_debug, 4 * m.s, m.r);
                out.line(m.set.literal());
                json j = set_json(m.set);
                j["r"] = m.r.str();
                j["s"] = m.s.str();
                members.push_back(std::move(j));
            }
            out.doc = json{{"family", "prop7"}, {"members", std::move(members)}};
        } else if (*gen_chowla) {
            json members = json::array();
            std::vector<ChowlaTriple> triples = chowla_triples(chowla_count + 1);
            std::size_t emitted = 0;
            for (const ChowlaTriple& t : triples) {
                if (!t.admissible()) {
                    std::cerr << "skipping inadmissible triple (" << t.x << ", "
                              << t.y << ", " << t.z << ")\n";
                    continue;
                }
                if (emitted++ == chowla_count) break;
                pell_debug_pair(pell_debug, 3 * (t.x - t.y), t.psi);
                Multiset m = canonicalize({t.x, t.y, t.z});
                if (chowla_n == 4) m = union_sets(m, canonicalize({Int(1)}));
                CsSet s = scale_to_cs(m);
                out.line(s.literal());
                json j = set_json(s);
                j["triple"] = json::array({t.x.str(), t.y.str(), t.z.str()});
                j["psi"] = t.psi.str();
                members.push_back(std::move(j));
            }
            out.doc = json{{"family", "chowla"},
                           {"n", chowla_n},
                           {"members", std::move(members)}};
        } else if (*gen_frolov) {
            if (frolov_triple.empty() == frolov_tuple.empty())
                throw CLI::ValidationError("frolov",
                                           "give exactly one of --triple / --tuple");
            PythTuple t = make_pyth_tuple(parse_int_list(
                frolov_triple.empty() ? frolov_tuple : frolov_triple));
            Int c = parse_int(frolov_c);
            CsSet s = frolov_target ? frolov_target_size(*frolov_target, t, c)
                                    : frolov_zero_sum(pyth_to_sp(t), c);
            out.line(s.literal());
            out.doc = set_json(s);
            json tuple = json::array();
            for (const Int& e : t.entries) tuple.push_back(e.str());
            out.doc["tuple"] = std::move(tuple);
            out.doc["c"] = c.str();
        } else if (*gen_distinct) {
            CsSet s = distinct_cs_n(distinct_n, distinct_index);
            out.line(s.literal());
            out.doc = set_json(s);
            out.doc["index"] = distinct_index;
        } else if (*cat_add) {
            CsSet s = verify_cs(parse_set_argument(cat_set));
            Catalog catalog = load_or_empty(catalog_path);
            AddOutcome outcome = catalog.add(CatalogRecord{s, cat_tags, cat_source});
            catalog.save(catalog_path);
            out.line(outcome == AddOutcome::added ? "added" : "duplicate");
            out.doc = set_json(s);
            out.doc["outcome"] = outcome == AddOutcome::added ? "added" : "duplicate";
        } else if (*cat_list) {
            Catalog catalog = load_or_empty(catalog_path);
            CatalogFilter filter;
            filter.n = cat_n;
            filter.tag = cat_tag;
            filter.zero_sum_only = cat_zero_sum;
            json records = json::array();
            for (const CatalogRecord& r : catalog.query(filter)) {
                out.line(r.set.literal());
                records.push_back(json::parse(r.to_json_line()));
            }
            out.doc = json{{"records", std::move(records)}};
        }
        out.finish();
    } catch (const CsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
