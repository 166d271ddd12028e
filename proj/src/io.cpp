#include "fineint/io.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace fineint {

using nlohmann::json;

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& what)
    : Error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + what), line(l), column(c)
{
}

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

std::optional<Integer> integer_token(const std::string& s)
{
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

Integer parse_integer(const Token& t, std::size_t line)
{
    auto z = integer_token(t.text);
    if (!z) throw ParseError(line, t.column, "malformed integer '" + t.text + "'");
    return *z;
}

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Coefficients up to '=', then the right-hand side tokens.
std::pair<ZVec, std::vector<Token>> split_linear(const std::vector<Token>& toks, std::size_t line)
{
    ZVec coeffs;
    std::size_t i = 1;
    for (; i < toks.size() && toks[i].text != "="; ++i) coeffs.push_back(parse_integer(toks[i], line));
    if (i == toks.size()) throw ParseError(line, toks.back().column, "expected '='");
    if (coeffs.size() == 0) throw ParseError(line, toks[i].column, "missing coefficients");
    return {coeffs, std::vector<Token>(toks.begin() + static_cast<long>(i) + 1, toks.end())};
}

json number(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json number(const Rational& q)
{
    if (q.get_den() == 1) return number(Integer(q.get_num()));
    return to_string(q);
}

template <class T>
json vec(const Vec<T>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(number(x));
    return a;
}

template <class T>
json vecs(const std::vector<Vec<T>>& vs)
{
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec(v));
    return a;
}

json integers(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(number(x));
    return a;
}

Rational rational_of(const json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("report: expected a number or a rational string");
}

Integer integer_of(const json& j)
{
    Rational q = rational_of(j);
    if (q.get_den() != 1) throw Error("report: expected an integer");
    return q.get_num();
}

ZVec zvec_of(const json& j)
{
    ZVec v;
    for (const auto& x : j) v.push_back(integer_of(x));
    return v;
}

QVec qvec_of(const json& j)
{
    QVec v;
    for (const auto& x : j) v.push_back(rational_of(x));
    return v;
}

std::vector<ZVec> zvecs_of(const json& j)
{
    std::vector<ZVec> out;
    for (const auto& x : j) out.push_back(zvec_of(x));
    return out;
}

std::vector<QVec> qvecs_of(const json& j)
{
    std::vector<QVec> out;
    for (const auto& x : j) out.push_back(qvec_of(x));
    return out;
}

std::optional<PolygonType> polygon_type_of(const json& j)
{
    if (j.is_null()) return std::nullopt;
    const auto s = j.get<std::string>();
    if (s == "a") return PolygonType::a;
    if (s == "b") return PolygonType::b;
    if (s == "c") return PolygonType::c;
    throw Error("report: unknown polygon type " + s);
}

json type_json(const std::optional<PolygonType>& t) { return t ? json(to_string(*t)) : json(); }

std::string mode_name(BatchMode m) { return m == BatchMode::hollow ? "hollow" : "classify"; }

BatchEntry run_one(const PolytopeInput& in, BatchMode mode)
{
    BatchEntry e;
    e.id = in.id;
    try {
        LatticePolytope p = to_lattice_polytope(in);
        if (mode == BatchMode::hollow) e.hollow = analyze_hollow(p, in.id);
        else e.record = classify(p, in.id);
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

std::string histogram_key(const BatchEntry& e, BatchMode mode)
{
    if (!e.error.empty()) return "error";
    if (mode == BatchMode::hollow) return "fi_dim_" + std::to_string(e.hollow->fi_dim);
    return to_string(e.record->regime);
}

template <class T>
std::string csv_vec(const Vec<T>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

template <class T>
std::string csv_vecs(const std::vector<Vec<T>>& vs)
{
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ";" : "") + csv_vec(vs[i]);
    return s;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

} // namespace

std::vector<PolytopeInput> parse_polytope_file(const std::string& text)
{
    std::vector<PolytopeInput> out;
    std::set<std::string> ids;
    PolytopeInput cur;
    bool open = false;
    std::size_t record_line = 0;
    ZVec congruence;
    Integer congruence_rhs = 0, modulus = 0;
    bool has_congruence = false;

    auto finish = [&](std::size_t line) {
        if (!open) return;
        if (cur.vertices.empty()) throw ParseError(record_line, 1, "record without vertices");
        if (has_congruence) {
            if (!cur.affine) throw ParseError(record_line, 1, "congruence without level equation");
            if (congruence.size() != cur.affine->level.size())
                throw ParseError(record_line, 1, "congruence and level have different lengths");
            cur.affine->congruence = congruence;
            cur.affine->modulus = modulus;
            cur.affine->congruence_rhs = congruence_rhs;
        }
        if (cur.affine && cur.affine->level.size() != cur.ambient)
            throw ParseError(record_line, 1, "level equation length differs from the vertex width");
        if (!cur.id.empty() && !ids.insert(cur.id).second) throw ParseError(record_line, 1, "duplicate id " + cur.id);
        out.push_back(std::move(cur));
        cur = PolytopeInput{};
        open = false;
        has_congruence = false;
        (void)line;
    };

    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        auto toks = tokenize(raw);
        if (toks.empty()) {
            finish(line);
            continue;
        }
        if (!open) {
            open = true;
            record_line = line;
        }
        const std::string& head = toks[0].text;
        if (head == "id") {
            if (toks.size() != 2) throw ParseError(line, toks[0].column, "expected 'id <token>'");
            if (!cur.id.empty() || !cur.vertices.empty())
                throw ParseError(line, toks[0].column, "id must start a record");
            cur.id = toks[1].text;
        } else if (head == "level") {
            auto [coeffs, rhs] = split_linear(toks, line);
            if (rhs.size() != 1) throw ParseError(line, toks.back().column, "expected 'level a.. = r'");
            AffineLatticeSpec spec;
            spec.level = coeffs;
            spec.level_rhs = parse_integer(rhs[0], line);
            spec.congruence = ZVec(coeffs.size());
            spec.modulus = 1;
            cur.affine = spec;
        } else if (head == "congruence") {
            auto [coeffs, rhs] = split_linear(toks, line);
            if (rhs.size() != 3 || rhs[1].text != "mod")
                throw ParseError(line, toks.back().column, "expected 'congruence c.. = r mod m'");
            congruence = coeffs;
            congruence_rhs = parse_integer(rhs[0], line);
            modulus = parse_integer(rhs[2], line);
            if (modulus <= 0) throw ParseError(line, rhs[2].column, "modulus must be positive");
            has_congruence = true;
        } else {
            ZVec v;
            for (const auto& t : toks) v.push_back(parse_integer(t, line));
            if (cur.vertices.empty()) cur.ambient = v.size();
            else if (v.size() != cur.ambient)
                throw ParseError(line, 1,
                                 "ragged row: expected " + std::to_string(cur.ambient) + " entries, found " +
                                     std::to_string(v.size()));
            cur.vertices.push_back(std::move(v));
        }
    }
    finish(line + 1);
    return out;
}

std::vector<PolytopeInput> parse_grdb_dump(std::istream& in)
{
    std::vector<PolytopeInput> out;
    std::set<std::string> ids;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(line, 1, "expected '<id>: x,y,z; ...'");
        PolytopeInput p;
        p.id = trim(s.substr(0, colon));
        if (p.id.empty()) throw ParseError(line, 1, "empty id");
        const std::string ctx = "record " + p.id + ": ";
        std::string body = s.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t semi = body.find(';', pos);
            if (semi == std::string::npos) semi = body.size();
            std::string vtext = trim(body.substr(pos, semi - pos));
            const std::size_t column = colon + 2 + pos;
            pos = semi + 1;
            if (vtext.empty()) {
                if (semi == body.size()) break;
                throw ParseError(line, column, ctx + "empty vertex");
            }
            ZVec v;
            std::stringstream ss(vtext);
            std::string c;
            while (std::getline(ss, c, ',')) {
                auto z = integer_token(trim(c));
                if (!z) throw ParseError(line, column, ctx + "malformed integer '" + trim(c) + "'");
                v.push_back(*z);
            }
            if (p.vertices.empty()) p.ambient = v.size();
            else if (v.size() != p.ambient) throw ParseError(line, column, ctx + "ragged vertex");
            p.vertices.push_back(std::move(v));
        }
        if (p.vertices.empty()) throw ParseError(line, colon + 1, ctx + "no vertices");
        if (!ids.insert(p.id).second) throw ParseError(line, 1, "duplicate id " + p.id);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<PolytopeInput> grdb_dump_import(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_grdb_dump(in);
}

LatticePolytope to_lattice_polytope(const PolytopeInput& in)
{
    if (in.affine) return LatticePolytope(normalize_affine_lattice(*in.affine, in.vertices).vertices);
    return LatticePolytope(in.vertices);
}

bool BatchReport::any_failure() const
{
    return std::any_of(entries.begin(), entries.end(), [](const BatchEntry& e) { return !e.error.empty(); });
}

BatchReport run_batch(const std::vector<PolytopeInput>& inputs, std::size_t jobs, BatchMode mode)
{
    const auto t0 = std::chrono::steady_clock::now();
    BatchReport r;
    r.mode = mode;
    r.entries.resize(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) r.entries[i] = run_one(inputs[i], mode);
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, inputs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : r.entries) ++r.histogram[histogram_key(e, mode)];
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

json to_json(const BatchEntry& e, BatchMode mode)
{
    json j;
    j["id"] = e.id;
    j["status"] = e.error.empty() ? "ok" : "error";
    j["error"] = e.error.empty() ? json() : json(e.error);
    if (!e.error.empty()) return j;
    if (mode == BatchMode::hollow) {
        const HollowRecord& h = *e.hollow;
        j["width"] = number(h.width);
        j["width_direction"] = vec(h.width_direction);
        j["fi_dim"] = h.fi_dim;
        j["fi_vertices"] = vecs(h.fi_vertices);
        j["supp"] = vecs(h.supp);
        j["canonical_hull_vertices"] = vecs(h.canonical_hull_vertices);
        j["canonical_hull_integral"] = h.canonical_hull_integral;
        j["equals_canonical_hull"] = h.equals_canonical_hull;
        j["pi1_order"] = h.pi1_order ? number(*h.pi1_order) : json();
        return j;
    }
    const ClassificationRecord& c = *e.record;
    j["fi_dim"] = c.fi_dim;
    j["regime"] = to_string(c.regime);
    auto kd = kodaira_dimension(c.fi_dim);
    j["kodaira_dimension"] = kd ? json(*kd) : json();
    j["fi_vertices"] = vecs(c.fi_vertices);
    j["v_delta"] = c.v_delta ? vec(*c.v_delta) : json();
    j["lambda"] = c.lambda ? number(*c.lambda) : json();
    j["facet_type"] = type_json(c.facet_type_plus);
    j["facet_type_minus"] = type_json(c.facet_type_minus);
    j["projection_type"] = type_json(c.projection_type);
    j["theta_plus"] = vecs(c.theta_plus);
    j["theta_minus"] = vecs(c.theta_minus);
    j["Theta"] = vecs(c.Theta);
    j["pi1_order"] = number(c.pi1_order);
    j["supp"] = vecs(c.supp);
    j["canonical_hull_vertices"] = vecs(c.canonical_hull_vertices);
    j["canonical_hull_integral"] = c.canonical_hull_integral;
    j["equals_canonical_hull"] = c.equals_canonical_hull;
    j["reflexive_hull_vertices"] = vecs(c.reflexive_hull_vertices);
    j["psi"] = integers(c.psi);
    j["translation"] = vec(c.translation);
    j["flags"] = c.flags;
    return j;
}

json to_json(const BatchReport& r)
{
    json j;
    j["format"] = "fineint-report";
    j["version"] = 1;
    j["mode"] = mode_name(r.mode);
    j["histogram"] = r.histogram;
    j["records"] = json::array();
    for (const auto& e : r.entries) j["records"].push_back(to_json(e, r.mode));
    return j;
}

BatchReport report_from_json(const json& j)
{
    if (j.value("format", "") != "fineint-report" || j.value("version", 0) != 1)
        throw Error("not a version 1 fineint report");
    BatchReport r;
    const std::string mode = j.at("mode");
    if (mode == "hollow") r.mode = BatchMode::hollow;
    else if (mode != "classify") throw Error("report: unknown mode " + mode);
    for (const auto& [k, v] : j.at("histogram").items()) r.histogram[k] = v.get<std::size_t>();
    for (const auto& x : j.at("records")) {
        BatchEntry e;
        e.id = x.at("id");
        if (x.at("status") == "error") {
            e.error = x.at("error");
            r.entries.push_back(std::move(e));
            continue;
        }
        if (r.mode == BatchMode::hollow) {
            HollowRecord h;
            h.id = e.id;
            h.width = integer_of(x.at("width"));
            h.width_direction = zvec_of(x.at("width_direction"));
            h.fi_dim = x.at("fi_dim");
            h.fi_vertices = qvecs_of(x.at("fi_vertices"));
            h.supp = zvecs_of(x.at("supp"));
            h.canonical_hull_vertices = qvecs_of(x.at("canonical_hull_vertices"));
            h.canonical_hull_integral = x.at("canonical_hull_integral");
            h.equals_canonical_hull = x.at("equals_canonical_hull");
            if (!x.at("pi1_order").is_null()) h.pi1_order = integer_of(x.at("pi1_order"));
            e.hollow = std::move(h);
        } else {
            ClassificationRecord c;
            c.id = e.id;
            c.fi_dim = x.at("fi_dim");
            c.regime = parse_regime(x.at("regime"));
            c.fi_vertices = qvecs_of(x.at("fi_vertices"));
            if (!x.at("v_delta").is_null()) c.v_delta = zvec_of(x.at("v_delta"));
            if (!x.at("lambda").is_null()) c.lambda = rational_of(x.at("lambda"));
            c.facet_type_plus = polygon_type_of(x.at("facet_type"));
            c.facet_type_minus = polygon_type_of(x.at("facet_type_minus"));
            c.projection_type = polygon_type_of(x.at("projection_type"));
            c.theta_plus = zvecs_of(x.at("theta_plus"));
            c.theta_minus = zvecs_of(x.at("theta_minus"));
            c.Theta = zvecs_of(x.at("Theta"));
            c.pi1_order = integer_of(x.at("pi1_order"));
            c.supp = zvecs_of(x.at("supp"));
            c.canonical_hull_vertices = qvecs_of(x.at("canonical_hull_vertices"));
            c.canonical_hull_integral = x.at("canonical_hull_integral");
            c.equals_canonical_hull = x.at("equals_canonical_hull");
            c.reflexive_hull_vertices = zvecs_of(x.at("reflexive_hull_vertices"));
            for (const auto& z : x.at("psi")) c.psi.push_back(integer_of(z));
            c.translation = zvec_of(x.at("translation"));
            c.flags = x.at("flags").get<std::vector<std::string>>();
            e.record = std::move(c);
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

const char* const csv_header = "id,status,fi_dim,regime,fi_vertices,v_delta,lambda,facet_type,facet_type_minus,"
                               "projection_type,pi1_order,supp,canonical_hull_vertices,canonical_hull_integral,"
                               "equals_canonical_hull,psi,width,error";

std::string emit_report(const BatchReport& r, ReportFormat format)
{
    if (format == ReportFormat::json) return to_json(r).dump(1) + "\n";
    std::ostringstream os;
    os << "# fineint report csv v1\n" << csv_header << "\n";
    auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
    auto type = [](const std::optional<PolygonType>& t) { return t ? to_string(*t) : std::string(); };
    for (const auto& e : r.entries) {
        std::vector<std::string> f(18);
        f[0] = e.id;
        f[1] = e.error.empty() ? "ok" : "error";
        f[17] = e.error;
        if (e.record) {
            const auto& c = *e.record;
            f[2] = std::to_string(c.fi_dim);
            f[3] = to_string(c.regime);
            f[4] = csv_vecs(c.fi_vertices);
            f[5] = c.v_delta ? csv_vec(*c.v_delta) : "";
            f[6] = c.lambda ? to_string(*c.lambda) : "";
            f[7] = type(c.facet_type_plus);
            f[8] = type(c.facet_type_minus);
            f[9] = type(c.projection_type);
            f[10] = to_string(c.pi1_order);
            f[11] = csv_vecs(c.supp);
            f[12] = csv_vecs(c.canonical_hull_vertices);
            f[13] = flag(c.canonical_hull_integral);
            f[14] = flag(c.equals_canonical_hull);
            for (std::size_t i = 0; i < c.psi.size(); ++i) f[15] += (i ? " " : "") + to_string(c.psi[i]);
        } else if (e.hollow) {
            const auto& h = *e.hollow;
            f[2] = std::to_string(h.fi_dim);
            f[4] = csv_vecs(h.fi_vertices);
            f[10] = h.pi1_order ? to_string(*h.pi1_order) : "";
            f[11] = csv_vecs(h.supp);
            f[12] = csv_vecs(h.canonical_hull_vertices);
            f[13] = flag(h.canonical_hull_integral);
            f[14] = flag(h.equals_canonical_hull);
            f[16] = to_string(h.width);
        }
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_field(f[i]);
        os << "\n";
    }
    return os.str();
}

} // namespace fineint
