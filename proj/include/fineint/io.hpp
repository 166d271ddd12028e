#pragma once

#include "fineint/classify.hpp"
#include "fineint/lattice.hpp"

#include <json.hpp>

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fineint {

struct ParseError : Error {
    std::size_t line = 0;
    std::size_t column = 0;
    ParseError(std::size_t line, std::size_t column, const std::string& what);
};

struct PolytopeInput {
    std::string id;
    std::size_t ambient = 0;
    std::vector<ZVec> vertices;
    std::optional<AffineLatticeSpec> affine;
};

// Records separated by blank lines. Each record has an optional `id <token>`
// line, optional `level a.. = r` and `congruence c.. = r mod m` lines for
// inputs on an affine sublattice, and one vertex per line. `#` starts a comment.
std::vector<PolytopeInput> parse_polytope_file(const std::string& text);

// One `<id>: x,y,z; x,y,z; ...` record per line.
std::vector<PolytopeInput> parse_grdb_dump(std::istream& in);
std::vector<PolytopeInput> grdb_dump_import(const std::string& path);

// Lattice polytope in Z^3 coordinates, normalizing affine-sublattice inputs.
LatticePolytope to_lattice_polytope(const PolytopeInput& in);

enum class BatchMode { classify, hollow };

struct BatchEntry {
    std::string id;
    std::optional<ClassificationRecord> record;
    std::optional<HollowRecord> hollow;
    std::string error; // nonempty when the record failed
};

struct BatchReport {
    BatchMode mode = BatchMode::classify;
    std::vector<BatchEntry> entries;
    std::map<std::string, std::size_t> histogram; // by regime, or by Fine interior dimension in hollow mode
    double seconds = 0;

    bool any_failure() const;
};

// Entries are in input order for every value of `jobs`.
BatchReport run_batch(const std::vector<PolytopeInput>& inputs, std::size_t jobs = 1,
                      BatchMode mode = BatchMode::classify);

enum class ReportFormat { json, csv };

nlohmann::json to_json(const BatchEntry& e, BatchMode mode);
nlohmann::json to_json(const BatchReport& r);
BatchReport report_from_json(const nlohmann::json& j);

// Timing is left out so reports of equal inputs compare equal byte for byte.
std::string emit_report(const BatchReport& r, ReportFormat format);
extern const char* const csv_header;

} // namespace fineint
