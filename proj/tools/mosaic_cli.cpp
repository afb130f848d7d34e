// Command line surface for the mosaic floorplan library: enumeration runs,
// conversions between floorplans and permutations, class checks, equivalence
// tests and generating-tree exports.
//
// Exit codes: 0 success / positive verdict, 2 parse error, 3 domain error
// (validation failures, class membership, negative verdicts), 4 resource
// limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mosaic/bijection.hpp"
#include "mosaic/dperm.hpp"
#include "mosaic/gentree.hpp"
#include "mosaic/geometry.hpp"
#include "mosaic/text_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream is(path);
    if (!is) throw mosaic::ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw mosaic::Error("cannot write " + path);
    os << text;
}

struct CountOpts {
    int dim = 2;
    int max_n = 1;
    int workers = 1;
    std::uint64_t frontier_cap = 10'000'000;
    std::string checkpoint;
    std::string output;
};

int run_count(const CountOpts& o) {
    mosaic::EnumerationLimits limits{o.workers, o.frontier_cap};
    mosaic::LevelCounter counter(o.dim, limits);
    if (!o.checkpoint.empty() && std::filesystem::exists(o.checkpoint)) {
        mosaic::Frontier f = mosaic::load_frontier_file(o.checkpoint);
        if (f.dim != o.dim)
            throw mosaic::DomainError("checkpoint dimension " + std::to_string(f.dim) +
                                      " does not match --dim " + std::to_string(o.dim));
        counter = mosaic::LevelCounter::resume(f, limits);
    }
    std::ostringstream csv;
    csv << "n,count\n";
    try {
        while (counter.level() < o.max_n) {
            counter.advance();
            if (!o.checkpoint.empty())
                mosaic::save_frontier_file(counter.frontier(), o.checkpoint);
        }
    } catch (const mosaic::ResourceLimitError& e) {
        for (std::size_t i = 0; i < counter.counts().size(); ++i)
            csv << i + 1 << "," << counter.counts()[i] << "\n";
        write_output(o.output, csv.str());
        std::cerr << "resource limit: " << e.what() << " (last completed level "
                  << e.last_completed_level() << ")\n";
        return kExitResource;
    }
    for (int n = 1; n <= o.max_n; ++n) csv << n << "," << counter.counts()[n - 1] << "\n";
    write_output(o.output, csv.str());
    return kExitOk;
}

struct ConvertOpts {
    std::string direction;
    std::string input;
    std::string output;
};

int run_convert(const ConvertOpts& o) {
    const std::string text = read_input(o.input);
    if (o.direction == "to-perm") {
        const mosaic::Floorplan fp = mosaic::floorplan_from_json(text);
        write_output(o.output, mosaic::permutation_to_text(mosaic::phi(fp)));
    } else {
        const mosaic::DPermutation p = mosaic::permutation_from_text(text);
        write_output(o.output, mosaic::floorplan_to_json(mosaic::dperm_to_floorplan(p)));
    }
    return kExitOk;
}

struct CheckOpts {
    std::string cls;
    std::string input;
};

int run_check(const CheckOpts& o) {
    const mosaic::DPermutation p = mosaic::permutation_from_text(read_input(o.input));
    bool ok = false;
    mosaic::Occurrence occ;
    if (o.cls == "f") {
        ok = mosaic::is_in_F(p, &occ);
    } else if (o.cls == "separable") {
        ok = mosaic::is_separable(p);
    } else {  // baxter2d
        if (p.dims != 2)
            throw mosaic::DomainError("baxter2d expects a single permutation");
        ok = mosaic::is_baxter_2d(p.perms[0]);
    }
    if (ok) {
        std::cout << "yes\n";
        return kExitOk;
    }
    if (o.cls == "f")
        std::cout << "no " << occ.to_string() << "\n";
    else
        std::cout << "no\n";
    return kExitDomain;
}

struct TreeOpts {
    int dim = 2;
    int max_n = 1;
    std::string format = "jsonl";
    std::string output;
};

int run_tree(const TreeOpts& o) {
    std::ostringstream os;
    if (o.format == "dot") os << "digraph gentree {\n";

    struct Node {
        mosaic::Floorplan fp;
        int id;
    };
    std::vector<Node> level{{mosaic::single_block(o.dim), 0}};
    int next_id = 1;
    const auto emit = [&](int id, int depth, int parent, const mosaic::Label& label) {
        if (o.format == "dot") {
            os << "  n" << id << " [label=\"" << label.key() << "\"];\n";
            if (parent >= 0) os << "  n" << parent << " -> n" << id << ";\n";
        } else {
            os << "{\"id\":" << id << ",\"n\":" << depth << ",\"parent\":";
            if (parent >= 0)
                os << parent;
            else
                os << "null";
            os << ",\"label\":\"" << label.key() << "\"}\n";
        }
    };
    emit(0, 1, -1, mosaic::label_of(level[0].fp));
    for (int depth = 1; depth < o.max_n; ++depth) {
        std::vector<Node> next;
        for (const Node& node : level) {
            for (mosaic::Floorplan& child : mosaic::children(node.fp)) {
                const int id = next_id++;
                emit(id, depth + 1, node.id, mosaic::label_of(child));
                next.push_back(Node{std::move(child), id});
            }
        }
        level = std::move(next);
    }
    if (o.format == "dot") os << "}\n";
    write_output(o.output, os.str());
    return kExitOk;
}

int run_equiv(const std::string& file_a, const std::string& file_b) {
    const mosaic::Floorplan a = mosaic::floorplan_from_json(read_input(file_a));
    const mosaic::Floorplan b = mosaic::floorplan_from_json(read_input(file_b));
    if (mosaic::canonical_signature(a) == mosaic::canonical_signature(b)) {
        std::cout << "equivalent\n";
        return kExitOk;
    }
    std::cout << "not equivalent\n";
    return kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mosaic d-dimensional floorplan toolkit"};
    app.require_subcommand(1);

    CountOpts count_opts;
    CLI::App* count = app.add_subcommand("count", "count floorplans level by level (CSV)");
    count->add_option("--dim", count_opts.dim, "floorplan dimension d")->required();
    count->add_option("--max-n", count_opts.max_n, "largest block count")->required();
    count->add_option("--workers", count_opts.workers, "worker threads");
    count->add_option("--frontier-cap", count_opts.frontier_cap, "max distinct labels per level");
    count->add_option("--checkpoint", count_opts.checkpoint, "resumable frontier file");
    count->add_option("--output", count_opts.output, "output path (default stdout)");

    ConvertOpts convert_opts;
    CLI::App* convert = app.add_subcommand("convert", "convert floorplan JSON <-> permutation text");
    convert->add_option("direction", convert_opts.direction, "to-perm or from-perm")
        ->required()
        ->check(CLI::IsMember({"to-perm", "from-perm"}));
    convert->add_option("--input", convert_opts.input, "input path (default stdin)");
    convert->add_option("--output", convert_opts.output, "output path (default stdout)");

    CheckOpts check_opts;
    CLI::App* check = app.add_subcommand("check", "class membership verdict for a permutation");
    check->add_option("class", check_opts.cls, "f, separable or baxter2d")
        ->required()
        ->check(CLI::IsMember({"f", "separable", "baxter2d"}));
    check->add_option("--input", check_opts.input, "input path (default stdin)");

    TreeOpts tree_opts;
    CLI::App* tree = app.add_subcommand("tree", "emit the generating tree");
    tree->add_option("--dim", tree_opts.dim, "floorplan dimension d")->required();
    tree->add_option("--max-n", tree_opts.max_n, "largest block count")->required();
    tree->add_option("--format", tree_opts.format, "dot or jsonl")
        ->check(CLI::IsMember({"dot", "jsonl"}));
    tree->add_option("--output", tree_opts.output, "output path (default stdout)");

    std::string equiv_a, equiv_b;
    CLI::App* equiv = app.add_subcommand("equiv", "weak-equivalence verdict for two floorplans");
    equiv->add_option("fileA", equiv_a, "first floorplan JSON")->required();
    equiv->add_option("fileB", equiv_b, "second floorplan JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (count->parsed()) return run_count(count_opts);
        if (convert->parsed()) return run_convert(convert_opts);
        if (check->parsed()) return run_check(check_opts);
        if (tree->parsed()) return run_tree(tree_opts);
        if (equiv->parsed()) return run_equiv(equiv_a, equiv_b);
    } catch (const mosaic::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mosaic::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const mosaic::NotInClassF& e) {
        std::cerr << "domain error: " << e.what() << ": " << e.witness() << "\n";
        return kExitDomain;
    } catch (const mosaic::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const mosaic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
