#include "fineint/fixtures.hpp"

#include "fineint/classify.hpp"
#include "fineint/lattice.hpp"

#include <sstream>

namespace fineint {

extern const char* const embedded_fixture_json;

namespace {

using nlohmann::json;

template <class T>
std::string show(const std::vector<T>& xs)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << to_string(xs[i]);
    os << "}";
    return os.str();
}

std::vector<Integer> integers_from_json(const json& j)
{
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(Integer(x.get<long>()));
    return out;
}

class Checker {
public:
    Checker(std::string section, std::vector<FixtureCheck>& out) : section_(std::move(section)), out_(out) {}

    void record(const std::string& id) { id_ = id; }

    void check(const std::string& field, bool ok, const std::string& expected, const std::string& actual)
    {
        out_.push_back({section_, id_, field, ok, expected, actual});
    }

    template <class T>
    void same_set(const std::string& field, std::vector<T> expected, std::vector<T> actual)
    {
        expected = sorted_unique(std::move(expected));
        actual = sorted_unique(std::move(actual));
        check(field, expected == actual, show(expected), show(actual));
    }

    void same_multiset(const std::string& field, std::vector<Integer> expected, std::vector<Integer> actual)
    {
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        check(field, expected == actual, show(expected), show(actual));
    }

    template <class T>
    void same(const std::string& field, const T& expected, const T& actual)
    {
        check(field, expected == actual, to_string(expected), to_string(actual));
    }

    void failed(const std::string& what) { check("error", false, "", what); }

private:
    std::string section_;
    std::string id_;
    std::vector<FixtureCheck>& out_;
};

std::string show_type(const std::optional<PolygonType>& t) { return t ? to_string(*t) : "none"; }

void check_asymmetric(const json& r, Checker& c)
{
    LatticePolytope p(zvecs_from_json(r["vertices"]));
    ClassificationRecord rec = classify(p, r["id"]);
    c.check("regime", rec.regime == Regime::elliptic_asymmetric, "elliptic_asymmetric", to_string(rec.regime));
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), rec.fi_vertices);
    c.same("v_delta", zvec_from_json(r["v_delta"]), rec.v_delta.value_or(ZVec{}));
    c.same("lambda", parse_rational(r["lambda"]), rec.lambda.value_or(Rational(0)));
    c.same_multiset("weights", integers_from_json(r["weights"]), vertex_weight_relation(p));
    std::vector<ZVec> normals;
    for (const auto& f : facets(p)) normals.push_back(f.normal);
    c.same_set("facet_normals", zvecs_from_json(r["facet_normals"]), normals);
    c.same_set("theta_plus", zvecs_from_json(r["theta_plus"]), rec.theta_plus);
    if (rec.v_delta)
        c.same("theta_plus_normal", zvec_from_json(r["theta_plus_normal"]), reflexive_facet(p, *rec.v_delta).normal);
    c.same_set("Theta", zvecs_from_json(r["Theta"]), rec.Theta);
    c.same_set("supp", zvecs_from_json(r["supp"]), rec.supp);
    c.same_set("canonical_hull", qvecs_from_json(r["canonical_hull"]), rec.canonical_hull_vertices);
    c.check("facet_projection_pairing", rec.facet_type_plus && rec.facet_type_plus == rec.projection_type,
            show_type(rec.facet_type_plus), show_type(rec.projection_type));
}

void check_symmetric(const json& r, Checker& c)
{
    LatticePolytope p(zvecs_from_json(r["vertices"]));
    ClassificationRecord rec = classify(p, r["id"]);
    c.check("regime", rec.regime == Regime::elliptic_symmetric, "elliptic_symmetric", to_string(rec.regime));
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), rec.fi_vertices);
    c.same("v_delta", zvec_from_json(r["v_delta"]), rec.v_delta.value_or(ZVec{}));
    const Rational lambda = parse_rational(r["lambda"]);
    c.same("lambda", lambda, rec.lambda.value_or(Rational(0)));
    // The table does not say which facet is θ₊.
    auto a = sorted_unique(zvecs_from_json(r["thetas"][0]));
    auto b = sorted_unique(zvecs_from_json(r["thetas"][1]));
    auto x = sorted_unique(rec.theta_plus);
    auto y = sorted_unique(rec.theta_minus);
    c.check("thetas", (a == x && b == y) || (a == y && b == x), show(a) + " " + show(b), show(x) + " " + show(y));
    c.same_set("supp", zvecs_from_json(r["supp"]), rec.supp);
    c.check("equals_canonical_hull", rec.equals_canonical_hull, "true", rec.equals_canonical_hull ? "true" : "false");
    Integer law = lambda == Rational(1, 2) ? 2 : lambda == Rational(2, 3) ? 3 : 0;
    c.same("pi1_lambda_law", law, rec.pi1_order);
}

void check_dim3(const json& r, Checker& c)
{
    LatticePolytope p(zvecs_from_json(r["vertices"]));
    ClassificationRecord rec = classify(p, r["id"]);
    c.check("regime", rec.regime == Regime::general_type, "general_type", to_string(rec.regime));
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), rec.fi_vertices);
    c.same_set("supp", zvecs_from_json(r["supp"]), rec.supp);
    c.same_set("canonical_hull", qvecs_from_json(r["canonical_hull"]), rec.canonical_hull_vertices);
    c.same("pi1", Integer(r["pi1"].get<long>()), rec.pi1_order);
}

void check_hollow(const json& r, Checker& c)
{
    LatticePolytope p(zvecs_from_json(r["vertices"]));
    c.check("hollow", is_hollow(p), "true", is_hollow(p) ? "true" : "false");
    HollowRecord h = analyze_hollow(p, "D" + std::to_string(r["index"].get<int>()));
    c.same("width", Integer(r["width"].get<long>()), h.width);
    c.same("fi_dim", Integer(r["fi_dim"].get<long>()), Integer(h.fi_dim));
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), h.fi_vertices);
    if (h.fi_dim >= 0) c.same("pi1", Integer(r["pi1"].get<long>()), h.pi1_order.value_or(Integer(0)));
    if (r.contains("supp")) c.same_set("supp", zvecs_from_json(r["supp"]), h.supp);
    if (r.contains("canonical_hull"))
        c.same_set("canonical_hull", qvecs_from_json(r["canonical_hull"]), h.canonical_hull_vertices);
    if (r.contains("fan_rays")) {
        std::vector<ZVec> rays;
        for (const auto& f : facets(p)) rays.push_back(f.normal);
        c.same_set("fan_rays", zvecs_from_json(r["fan_rays"]), rays);
    }
}

void check_example(const json& r, Checker& c)
{
    LatticePolytope p(zvecs_from_json(r["vertices"]));
    ClassificationRecord rec = classify(p, r["id"]);
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), rec.fi_vertices);
    // Listed as a generating set: Δ together with extra points.
    Polytope expected = hull(qvecs_from_json(r["reflexive_hull"]));
    c.same_set("reflexive_hull", expected.vertices(), hull(rec.reflexive_hull_vertices).vertices());
    c.same_set("canonical_hull", expected.vertices(), rec.canonical_hull_vertices);
    const bool refl = is_reflexive(p);
    c.check("reflexive", refl == r["reflexive"].get<bool>(), r["reflexive"].dump(), refl ? "true" : "false");
}

const json* find_record(const std::string& id)
{
    for (const char* sec : {"asymmetric", "symmetric", "dim3", "examples"})
        for (const auto& r : fixtures()[sec])
            if (r["id"] == id) return &r;
    return nullptr;
}

void check_affine(const json& r, Checker& c)
{
    AffineLatticeSpec spec{zvec_from_json(r["level"]), Integer(r["level_rhs"].get<long>()),
                           zvec_from_json(r["congruence"]), Integer(r["modulus"].get<long>()),
                           Integer(r["congruence_rhs"].get<long>())};
    AffineNormalization n = normalize_affine_lattice(spec, zvecs_from_json(r["points"]));
    LatticePolytope p(n.vertices);
    Polytope fi = fine_interior(p);
    std::vector<QVec> fi_vertices;
    for (const auto& v : fi.vertices()) fi_vertices.push_back(n.to_ambient(v));
    c.same_set("fi_vertices", qvecs_from_json(r["fi_vertices"]), fi_vertices);
    std::vector<QVec> fi_points;
    for (const auto& x : lattice_points(fi)) fi_points.push_back(n.to_ambient(to_rational(x)));
    c.same_set("fi_lattice_points", qvecs_from_json(r["fi_lattice_points"]), fi_points);
    if (r.contains("pi1")) c.same("pi1", Integer(r["pi1"].get<long>()), pi1_order(p));
    if (r.contains("normal_relation"))
        c.same_multiset("normal_relation", integers_from_json(r["normal_relation"]), facet_normal_relation(p));
    if (r.contains("equivalent_to")) {
        const json* other = find_record(r["equivalent_to"]);
        bool eq = other && lattice_equivalent(p, LatticePolytope(zvecs_from_json((*other)["vertices"])));
        c.check("equivalent_to", eq, r["equivalent_to"].get<std::string>(), eq ? "equivalent" : "not equivalent");
    }
}

} // namespace

std::string_view fixture_text() { return embedded_fixture_json; }

const nlohmann::json& fixtures()
{
    static const nlohmann::json parsed = nlohmann::json::parse(fixture_text());
    return parsed;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ZVec zvec_from_json(const nlohmann::json& j)
{
    ZVec v;
    for (const auto& x : j) {
        if (x.is_string()) v.push_back(to_integer(QVec{parse_rational(x.get<std::string>())})[0]);
        else v.push_back(Integer(x.get<long>()));
    }
    return v;
}

QVec qvec_from_json(const nlohmann::json& j)
{
    QVec v;
    for (const auto& x : j) v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    return v;
}

std::vector<ZVec> zvecs_from_json(const nlohmann::json& j)
{
    std::vector<ZVec> out;
    for (const auto& x : j) out.push_back(zvec_from_json(x));
    return out;
}

std::vector<QVec> qvecs_from_json(const nlohmann::json& j)
{
    std::vector<QVec> out;
    for (const auto& x : j) out.push_back(qvec_from_json(x));
    return out;
}

std::vector<std::string> fixture_sections() { return {"asymmetric", "symmetric", "dim3", "hollow", "examples", "affine"}; }

std::vector<FixtureCheck> check_fixture_section(const std::string& section)
{
    const json& all = fixtures();
    if (!all.contains(section)) throw Error("unknown fixture section: " + section);
    std::vector<FixtureCheck> out;
    Checker c(section, out);
    for (const auto& r : all[section]) {
        c.record(r.contains("id") ? r["id"].get<std::string>() : "D" + std::to_string(r["index"].get<int>()));
        try {
            if (section == "asymmetric") check_asymmetric(r, c);
            else if (section == "symmetric") check_symmetric(r, c);
            else if (section == "dim3") check_dim3(r, c);
            else if (section == "hollow") check_hollow(r, c);
            else if (section == "examples") check_example(r, c);
            else check_affine(r, c);
        } catch (const std::exception& e) {
            c.failed(e.what());
        }
    }
    return out;
}

} // namespace fineint
