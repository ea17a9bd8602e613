#include <CLI11.hpp>

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "turanham/cache.hpp"
#include "turanham/counts.hpp"
#include "turanham/fixtures.hpp"
#include "turanham/table_io.hpp"
#include "turanham/verify.hpp"

namespace {

// Exit codes are a stable contract: 0 success, 1 verification or computation
// failure, 2 argument errors.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ComputeArgs {
    int d = 0;
    int n = 0;
    std::string column = "labelled";
};

struct TableArgs {
    int d = 0;
    int n_max = -1;  // default: fixture coverage for d <= 6
    std::string format = "csv";
    std::string column = "labelled";
    std::string output;
    std::string cache_path;
};

struct VerifyArgs {
    std::string scope = "all";
    int max_points = 12;
    int beyond_n_max = 0;
    bool printed_eq_chord = false;
    bool printed_eq_weights = false;
};

struct CacheArgs {
    std::string path;
    std::vector<int> d_values;
    int n_max = -1;
};

turanham::Corrections corrections_from(const VerifyArgs& args) {
    turanham::Corrections corrections;
    if (args.printed_eq_chord) {
        corrections.chord = turanham::ChordFormula::printed_d3;
    }
    if (args.printed_eq_weights) {
        corrections.dihedral = turanham::DihedralWeights::printed;
    }
    return corrections;
}

int default_n_max(int d) {
    return turanham::FixtureSet::load().n_max(d);
}

int run_compute(const ComputeArgs& args) {
    turanham::CountingEngine engine;
    const turanham::Column column = turanham::parse_column(args.column);
    turanham::ExactInt value;
    switch (column) {
        case turanham::Column::linear: value = engine.linear(args.d, args.n); break;
        case turanham::Column::labelled: value = engine.labelled(args.d, args.n); break;
        case turanham::Column::rotations: value = engine.rotations(args.d, args.n); break;
        case turanham::Column::all_symmetries: value = engine.all_symmetries(args.d, args.n); break;
    }
    std::cout << value.str() << '\n';
    return kExitOk;
}

int run_table(const TableArgs& args) {
    turanham::CountingEngine engine;
    if (!args.cache_path.empty()) {
        std::ifstream probe(args.cache_path);
        if (probe.good()) {
            turanham::load_cache(args.cache_path, engine);
        }
    }
    int n_max = args.n_max;
    if (n_max < 0) {
        n_max = default_n_max(args.d);
        if (n_max == 0) {
            std::cerr << "seqtool: no default row count for d=" << args.d
                      << "; pass --n-max explicitly\n";
            return kExitUsage;
        }
    }
    const turanham::TableFormat format = turanham::parse_table_format(args.format);
    const turanham::Column column = turanham::parse_column(args.column);
    std::vector<turanham::CountsRecord> records;
    for (int n = 1; n <= n_max; ++n) {
        records.push_back(engine.record(args.d, n));
    }
    const std::string text = turanham::write_table(records, format, column);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "seqtool: cannot write '" << args.output << "'\n";
            return kExitFailure;
        }
    }
    if (!args.cache_path.empty()) {
        turanham::save_cache(args.cache_path, engine);
    }
    return kExitOk;
}

int run_verify_cmd(const VerifyArgs& args) {
    turanham::VerifyOptions options;
    options.scope = turanham::parse_verify_scope(args.scope);
    options.max_points = args.max_points;
    options.beyond_n_max = args.beyond_n_max;
    options.corrections = corrections_from(args);
    return turanham::run_verify(options, std::cout) ? kExitOk : kExitFailure;
}

int run_cache_save(const CacheArgs& args) {
    turanham::CountingEngine engine;
    std::vector<int> sizes = args.d_values;
    if (sizes.empty()) {
        sizes = {2, 3, 4, 5, 6};
    }
    for (int d : sizes) {
        const int n_max = args.n_max >= 0 ? args.n_max : default_n_max(d);
        for (int n = 1; n <= n_max; ++n) {
            engine.record(d, n);
        }
    }
    turanham::save_cache(args.path, engine);
    std::cout << "saved " << args.path << '\n';
    return kExitOk;
}

int run_cache_load(const CacheArgs& args) {
    turanham::CountingEngine engine;
    turanham::load_cache(args.path, engine);
    std::size_t triangle_rows = 0;
    for (auto& [d, triangle] : engine.triangles()) {
        triangle_rows += static_cast<std::size_t>(triangle.max_row()) + 1;
    }
    std::size_t sector_entries = 0;
    for (auto& [key, table] : engine.sectors().tables()) {
        sector_entries += table.computed_entries().size();
    }
    std::cout << "loaded " << args.path << ": " << engine.triangles().size() << " triangles ("
              << triangle_rows << " rows), " << engine.sectors().tables().size()
              << " sector tables (" << sector_entries << " entries)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamiltonian-cycle and chord-diagram counts for complete multipartite graphs"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand("compute", "print one count");
    compute->add_option("-d,--parts-size", compute_args.d, "points per clique (>= 2)")->required();
    compute->add_option("-n,--cliques", compute_args.n, "number of cliques (>= 1)")->required();
    compute->add_option("--column", compute_args.column,
                        "linear | labelled | rotations | dihedral")
        ->capture_default_str();

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "print or write a result table");
    table->add_option("-d,--parts-size", table_args.d, "points per clique (>= 2)")->required();
    table->add_option("--n-max", table_args.n_max, "largest clique count (default: shipped range)");
    table->add_option("--format", table_args.format, "csv | json | markdown | bfile")
        ->capture_default_str();
    table->add_option("--column", table_args.column, "column for bfile output")
        ->capture_default_str();
    table->add_option("-o,--output", table_args.output, "write to a file instead of stdout");
    table->add_option("--cache", table_args.cache_path,
                      "memo-table file to load before and save after computing");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check the shipped reference data and identities");
    verify->add_option("--scope", verify_args.scope, "fixtures | oracle | identities | all")
        ->capture_default_str();
    verify->add_option("--max-points", verify_args.max_points,
                       "largest diagram the exhaustive checks enumerate")
        ->capture_default_str();
    verify->add_option("--beyond-n-max", verify_args.beyond_n_max,
                       "also print rows past the shipped range (marked, unverified)");
    verify->add_flag("--printed-chord-formula", verify_args.printed_eq_chord,
                     "use the known-bad d=3 chord shortcut (must fail)")
        ->group("");
    verify->add_flag("--printed-dihedral-weights", verify_args.printed_eq_weights,
                     "use the known-bad reflection weights (must fail)")
        ->group("");

    CacheArgs cache_args;
    CLI::App* cache = app.add_subcommand("cache", "save or inspect memo tables");
    CLI::App* cache_save = cache->add_subcommand("save", "compute tables and write them");
    cache_save->add_option("--path", cache_args.path, "output file")->required();
    cache_save->add_option("-d,--parts-size", cache_args.d_values, "clique sizes to cover");
    cache_save->add_option("--n-max", cache_args.n_max, "largest clique count per size");
    CLI::App* cache_load = cache->add_subcommand("load", "validate a cache file");
    cache_load->add_option("--path", cache_args.path, "input file")->required();
    cache->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "seqtool: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            return run_compute(compute_args);
        }
        if (table->parsed()) {
            return run_table(table_args);
        }
        if (verify->parsed()) {
            return run_verify_cmd(verify_args);
        }
        if (cache->parsed()) {
            return cache_save->parsed() ? run_cache_save(cache_args) : run_cache_load(cache_args);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "seqtool: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "seqtool: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
