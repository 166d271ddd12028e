#include "fineint/fixtures.hpp"
#include "fineint/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fineint;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_record_failure = 1;
constexpr int exit_unreadable = 2;

struct Unreadable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path)
{
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Unreadable("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<PolytopeInput> load_inputs(const std::string& path, bool dump)
{
    std::string text = read_all(path);
    try {
        if (dump) {
            std::istringstream in(text);
            return parse_grdb_dump(in);
        }
        return parse_polytope_file(text);
    } catch (const ParseError& e) {
        throw Unreadable(path + ": " + e.what());
    }
}

template <class T>
std::string join(const std::vector<T>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + to_string(xs[i]);
    return s;
}

std::string label(const PolytopeInput& in, std::size_t i)
{
    return in.id.empty() ? "#" + std::to_string(i + 1) : in.id;
}

void print_record(std::ostream& os, const ClassificationRecord& c)
{
    auto type = [](const std::optional<PolygonType>& t) { return t ? to_string(*t) : std::string("-"); };
    os << "  regime: " << to_string(c.regime) << "\n";
    os << "  fi_dim: " << c.fi_dim << "\n";
    os << "  fi vertices: " << join(c.fi_vertices) << "\n";
    if (c.v_delta) os << "  v_delta: " << to_string(*c.v_delta) << ", lambda: " << to_string(*c.lambda) << "\n";
    if (!c.theta_plus.empty()) os << "  theta+: " << join(c.theta_plus) << " type " << type(c.facet_type_plus) << "\n";
    if (!c.theta_minus.empty())
        os << "  theta-: " << join(c.theta_minus) << " type " << type(c.facet_type_minus) << "\n";
    if (c.projection_type) os << "  projection type: " << type(c.projection_type) << "\n";
    os << "  pi1 order: " << c.pi1_order << "\n";
    os << "  supp: " << join(c.supp) << "\n";
    os << "  canonical hull: " << join(c.canonical_hull_vertices)
       << (c.equals_canonical_hull ? " (equals the input)" : "") << "\n";
    if (!c.reflexive_hull_vertices.empty()) os << "  reflexive hull: " << join(c.reflexive_hull_vertices) << "\n";
    os << "  psi: " << join(c.psi) << "\n";
    for (const auto& f : c.flags) os << "  flag: " << f << "\n";
}

int emit(const BatchReport& report, const std::string& format, const std::string& expect)
{
    const std::string text = emit_report(report, format == "csv" ? ReportFormat::csv : ReportFormat::json);
    std::cout << text;
    std::cerr << report.entries.size() << " records in " << report.seconds << " s\n";
    for (const auto& [k, v] : report.histogram) std::cerr << "  " << k << ": " << v << "\n";
    int rc = report.any_failure() ? exit_record_failure : exit_ok;
    if (!expect.empty() && read_all(expect) != text) {
        std::cerr << "output differs from " << expect << "\n";
        rc = exit_record_failure;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fine interiors of lattice 3-topes and classification of canonical Fano 3-topes"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "json";
    std::string expect;
    std::size_t jobs = 1;
    bool dump = false;
    std::string section;

    auto* analyze = app.add_subcommand("analyze", "Classify polytopes and print a readable summary");
    analyze->add_option("input", input, "Vertex-list file, or - for stdin");
    analyze->add_flag("--dump", dump, "Input is in dump format");

    auto* batch = app.add_subcommand("batch", "Classify many polytopes and emit a report");
    batch->add_option("input", input, "Vertex-list or dump file, or - for stdin");
    batch->add_flag("--dump", dump, "Input is in dump format");

    auto* hollow = app.add_subcommand("hollow", "Analyze hollow 3-topes and emit a report");
    hollow->add_option("input", input, "Vertex-list file, or - for stdin");
    hollow->add_flag("--dump", dump, "Input is in dump format");

    for (auto* sub : {batch, hollow}) {
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--expect", expect, "Golden report; exit 1 when the output differs");
    }

    auto* ehrhart = app.add_subcommand("ehrhart", "Print point counts and the psi-vector");
    ehrhart->add_option("input", input, "Vertex-list file, or - for stdin");
    ehrhart->add_flag("--dump", dump, "Input is in dump format");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Recompute the embedded table corpus and report differences");
    fixtures_cmd->add_option("--section", section, "Only this section")
        ->check(CLI::IsMember(fixture_sections()));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fixtures_cmd) {
            std::size_t total = 0, failed = 0;
            for (const auto& s : fixture_sections()) {
                if (!section.empty() && s != section) continue;
                for (const auto& c : check_fixture_section(s)) {
                    ++total;
                    if (c.ok) continue;
                    ++failed;
                    std::cout << "MISMATCH " << c.section << " " << c.id << " " << c.field << "\n  expected: "
                              << c.expected << "\n  computed: " << c.actual << "\n";
                }
            }
            std::cout << total - failed << "/" << total << " fixture checks agree\n";
            return failed ? exit_record_failure : exit_ok;
        }

        auto inputs = load_inputs(input, dump);

        if (*batch || *hollow)
            return emit(run_batch(inputs, jobs, *hollow ? BatchMode::hollow : BatchMode::classify), format, expect);

        int rc = exit_ok;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            std::cout << label(inputs[i], i) << "\n";
            try {
                LatticePolytope p = to_lattice_polytope(inputs[i]);
                if (*analyze) {
                    print_record(std::cout, classify(p, inputs[i].id));
                } else {
                    EhrhartProfile e = ehrhart_profile(p);
                    std::cout << "  counts: " << join(e.counts) << "\n";
                    std::cout << "  interior counts (k = 1, 2): " << e.interior_counts[1] << " "
                              << e.interior_counts[2] << "\n";
                    std::cout << "  psi: " << join(e.psi) << "\n";
                    std::cout << "  phi: " << join(phi_vector(e)) << "\n";
                    std::cout << "  normalized volume: " << e.volume << "\n";
                    std::cout << "  palindromic: " << (psi_palindrome(e) ? "yes" : "no") << "\n";
                }
            } catch (const std::exception& ex) {
                std::cout << "  error: " << ex.what() << "\n";
                rc = exit_record_failure;
            }
        }
        return rc;
    } catch (const Unreadable& e) {
        std::cerr << e.what() << "\n";
        return exit_unreadable;
    }
}
