// polymin: minimise polyhedral models and check spatial formulas on them.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polymin/bisim.hpp"
#include "polymin/checker.hpp"
#include "polymin/error.hpp"
#include "polymin/generate.hpp"
#include "polymin/minimize.hpp"
#include "polymin/parser.hpp"

namespace fs = std::filesystem;
using namespace polymin;

namespace {

constexpr int kExitSelfCheck = 1;
constexpr int kExitInput = 2;

struct SelfCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error("cannot write '" + path + "'");
}

PosetModel load_poset(const std::string& path) { return cell_poset(load_simplicial_model(read_file(path))); }

void self_check_partitions(const PosetModel& p, const MinimalModel& mm) {
    const Partition direct = weak_pm_partition(p);
    if (!(direct == mm.partition))
        throw SelfCheckFailure("weak ±-bisimilarity and branching bisimilarity disagree: " +
                               describe(direct, p.names()) + " vs " + describe(mm.partition, p.names()));
    const AbstractEncoding abs = encode_abstract(p);
    const Partition via_abstract = strong_partition(abs.lts).pull_back(abs.components.class_map());
    if (!(via_abstract == mm.partition))
        throw SelfCheckFailure("abstract encoding gives " + describe(via_abstract, p.names()));
    if (rmin_via_quotient_d(p) != relation_of(mm.kripke))
        throw SelfCheckFailure("minimal relation differs from the quotient's d-transitions");
}

struct MinimizeOptions {
    std::string model;
    std::string out_dir = ".";
    bool emit_aut = false;
    bool trim_self_tau = false;
    bool self_check = false;
};

int run_minimize(const MinimizeOptions& o) {
    const PosetModel p = load_poset(o.model);
    const MinimalModel mm = minimal_model(p);
    if (o.self_check) self_check_partitions(p, mm);

    fs::create_directories(o.out_dir);
    const std::string stem = (fs::path(o.out_dir) / fs::path(o.model).stem()).string();
    write_output(stem + ".classes.json", classes_to_json(o.model, mm));
    write_output(stem + ".min.json", minimal_model_to_json(mm));
    if (o.emit_aut) {
        const Lts concrete = encode_concrete(p);
        write_output(stem + ".aut", to_aut(concrete));
        write_output(stem + ".min.aut", to_aut(quotient_lts(concrete, mm.partition, o.trim_self_tau)));
    }
    std::cerr << p.size() << " cells, " << mm.partition.class_count() << " classes\n";
    return 0;
}

struct CheckCliOptions {
    std::string model;
    std::string script;
    std::string output;
    bool on_minimal = false;
    bool self_check = false;
    bool strict_atoms = false;
};

int run_check(const CheckCliOptions& o) {
    const Script script = parse_script(read_file(o.script));
    std::string model_path = o.model;
    if (model_path.empty()) {
        if (!script.model_path) throw Error("no model given and the script has no 'load model' line");
        model_path = (fs::path(o.script).parent_path() / *script.model_path).string();
    }
    const PosetModel p = load_poset(model_path);
    const CheckOptions options{o.strict_atoms};

    auto on_poset = [&] {
        std::vector<std::pair<std::string, std::vector<bool>>> out;
        for (auto& [name, set] : check_script(ReflexiveKripkeModel::from_poset(p), script, options))
            out.emplace_back(name, to_bools(set));
        return out;
    };
    auto on_min = [&](const MinimalModel& mm) {
        std::vector<std::pair<std::string, std::vector<bool>>> out;
        for (auto& [name, set] : check_script(mm.kripke, script, options)) out.emplace_back(name, map_back(mm, set));
        return out;
    };

    if (o.on_minimal)
        for (const SaveDirective& save : script.saves)
            if (!is_eta_pure(save.formula))
                throw Error("save \"" + save.name +
                            "\" uses gamma or diamond, which the minimal model does not preserve; drop --on-minimal");

    std::vector<std::pair<std::string, std::vector<bool>>> results;
    if (o.on_minimal || o.self_check) {
        const MinimalModel mm = minimal_model(p);
        if (o.self_check) {
            self_check_partitions(p, mm);
            const auto direct = on_poset();
            results = on_min(mm);
            for (std::size_t i = 0; i < results.size(); ++i)
                if (is_eta_pure(script.saves[i].formula) && results[i].second != direct[i].second)
                    throw SelfCheckFailure("result \"" + results[i].first + "\" differs on the minimal model");
            if (!o.on_minimal) results = direct;
        } else {
            results = on_min(mm);
        }
    } else {
        results = on_poset();
    }
    write_output(o.output, results_to_json(model_path, results));
    return 0;
}

struct GenOptions {
    std::uint64_t seed = 1;
    std::size_t vertices = 4;
    std::size_t max_dim = 2;
    std::size_t atoms = 2;
    std::string output;
};

int run_gen(const GenOptions& o) {
    write_output(o.output, to_json(random_simplicial_model(o.seed, o.vertices, o.max_dim, o.atoms)));
    return 0;
}

int run_export_aut(const std::string& model, const std::string& output, bool abstract, bool trim_self_tau) {
    const PosetModel p = load_poset(model);
    if (abstract) {
        write_output(output, to_aut(encode_abstract(p).lts));
    } else {
        Lts l = encode_concrete(p);
        if (trim_self_tau) l = quotient_lts(l, Partition::identity(l.state_count()), true);
        write_output(output, to_aut(l));
    }
    return 0;
}

int run_poset(const std::string& model, const std::string& output) {
    const PosetModel p = load_poset(model);
    nlohmann::ordered_json doc;
    nlohmann::ordered_json elements = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        nlohmann::ordered_json e;
        e["name"] = p.name(i);
        e["vertices"] = p.vertex_set(i);
        e["atoms"] = p.valuation(i);
        elements.push_back(std::move(e));
    }
    doc["elements"] = std::move(elements);
    nlohmann::ordered_json covers = nlohmann::ordered_json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
    doc["covers"] = std::move(covers);
    write_output(output, doc.dump(2) + "\n");
    return 0;
}

int run_distinguish(const std::string& model, const std::string& a, const std::string& b) {
    const PosetModel p = load_poset(model);
    const auto f = distinguishing_formula(p, a, b);
    if (!f) {
        std::cout << "equivalent\n";
    } else {
        std::cout << to_string(*f, true) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimisation and model checking of polyhedral models"};
    app.require_subcommand(1);

    MinimizeOptions min_opts;
    auto* minimize = app.add_subcommand("minimize", "Compute equivalence classes and the minimal model");
    minimize->add_option("model", min_opts.model, "Model file")->required();
    minimize->add_option("-o,--out-dir", min_opts.out_dir, "Output directory");
    minimize->add_flag("--emit-aut", min_opts.emit_aut, "Also write the concrete LTS and its quotient as .aut");
    minimize->add_flag("--trim-self-tau", min_opts.trim_self_tau, "Drop tau self-loops from the quotient .aut");
    minimize->add_flag("--self-check", min_opts.self_check, "Cross-check the partition and relation");

    CheckCliOptions check_opts;
    auto* check = app.add_subcommand("check", "Evaluate the save directives of a script");
    check->add_option("script", check_opts.script, "Script file")->required();
    check->add_option("-m,--model", check_opts.model, "Model file (default: the script's load line)");
    check->add_option("-o,--output", check_opts.output, "Result file (default: stdout)");
    check->add_flag("--on-minimal", check_opts.on_minimal, "Evaluate on the minimal model and map back");
    check->add_flag("--self-check", check_opts.self_check, "Verify that both evaluation routes agree");
    check->add_flag("--strict-atoms", check_opts.strict_atoms, "Reject atoms the model does not declare");

    GenOptions gen_opts;
    auto* gen = app.add_subcommand("gen-random", "Write a random model");
    gen->add_option("--seed", gen_opts.seed, "Random seed");
    gen->add_option("--vertices", gen_opts.vertices, "Number of vertices");
    gen->add_option("--max-dim", gen_opts.max_dim, "Largest simplex dimension");
    gen->add_option("--atoms", gen_opts.atoms, "Number of atoms");
    gen->add_option("-o,--output", gen_opts.output, "Output file (default: stdout)");

    std::string aut_model, aut_output;
    bool aut_abstract = false, aut_trim = false;
    auto* aut = app.add_subcommand("export-aut", "Write the LTS encoding in Aldebaran format");
    aut->add_option("model", aut_model, "Model file")->required();
    aut->add_option("-o,--output", aut_output, "Output file (default: stdout)");
    aut->add_flag("--abstract", aut_abstract, "Use the abstract encoding instead of the concrete one");
    aut->add_flag("--trim-self-tau", aut_trim, "Drop tau self-loops");

    std::string poset_model, poset_output;
    auto* poset = app.add_subcommand("poset", "Dump the cell poset");
    poset->add_option("model", poset_model, "Model file")->required();
    poset->add_option("-o,--output", poset_output, "Output file (default: stdout)");

    std::string dist_model, dist_a, dist_b;
    auto* dist = app.add_subcommand("distinguish", "Print a formula separating two cells");
    dist->add_option("model", dist_model, "Model file")->required();
    dist->add_option("a", dist_a, "First cell")->required();
    dist->add_option("b", dist_b, "Second cell")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (minimize->parsed()) return run_minimize(min_opts);
        if (check->parsed()) return run_check(check_opts);
        if (gen->parsed()) return run_gen(gen_opts);
        if (aut->parsed()) return run_export_aut(aut_model, aut_output, aut_abstract, aut_trim);
        if (poset->parsed()) return run_poset(poset_model, poset_output);
        if (dist->parsed()) return run_distinguish(dist_model, dist_a, dist_b);
    } catch (const SelfCheckFailure& e) {
        std::cerr << "self-check failed: " << e.what() << "\n";
        return kExitSelfCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
