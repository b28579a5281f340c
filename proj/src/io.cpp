#include "recess/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace recess::io {

namespace {

// Maps JSON pointers to the line where their value starts.
class LineIndex
{
public:
    explicit LineIndex(std::string_view text)
    {
        struct Frame
        {
            bool object;
            std::string key;
            std::size_t index = 0;
            bool want_key = true;
        };
        std::vector<Frame> stack;
        int line = 1;
        auto path = [&] {
            std::string p;
            for (const auto& f : stack) p += "/" + (f.object ? f.key : std::to_string(f.index));
            return p;
        };
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c == '\n') {
                ++line;
            } else if (c == '"') {
                std::string s;
                for (++i; i < text.size() && text[i] != '"'; ++i) {
                    if (text[i] == '\\' && i + 1 < text.size()) ++i;
                    s += text[i];
                }
                if (!stack.empty() && stack.back().object && stack.back().want_key) {
                    stack.back().key = s;
                    stack.back().want_key = false;
                } else {
                    lines_.emplace(path(), line);
                }
            } else if (c == ',') {
                if (!stack.empty()) {
                    if (stack.back().object) stack.back().want_key = true;
                    else ++stack.back().index;
                }
            } else if (c == '{' || c == '[') {
                lines_.emplace(path(), line);
                stack.push_back(Frame{c == '{', {}, 0, true});
            } else if (c == '}' || c == ']') {
                if (!stack.empty()) stack.pop_back();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
                lines_.emplace(path(), line);
                while (i + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[i + 1])) ||
                                               text[i + 1] == '.' || text[i + 1] == '-' || text[i + 1] == '+'))
                    ++i;
            }
        }
    }

    int line_of(std::string pointer) const
    {
        while (true) {
            if (auto it = lines_.find(pointer); it != lines_.end()) return it->second;
            if (pointer.empty()) return 0;
            pointer.erase(pointer.rfind('/'));
        }
    }

private:
    std::map<std::string, int> lines_;
};

struct FieldError
{
    std::string path;
    std::string message;
};

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw FieldError{path, message}; }

const Json& field(const Json& obj, const std::string& path, const char* key)
{
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "/" + key, "missing required field");
    return *it;
}

const Json* optional_field(const Json& obj, const char* key)
{
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

Rational read_rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) fail(path, "floating-point numbers are not accepted; write \"p/q\"");
    if (!j.is_string()) fail(path, "expected a rational \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

Vector read_vector(const Json& j, const std::string& path, std::size_t dim)
{
    if (!j.is_array()) fail(path, "expected an array of rationals");
    if (j.size() != dim) fail(path, "expected " + std::to_string(dim) + " entries, found " + std::to_string(j.size()));
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = read_rational(j[i], path + "/" + std::to_string(i));
    return v;
}

const Json& read_array(const Json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

NormKind read_norm(const Json& j, const std::string& path)
{
    if (!j.is_string()) fail(path, "expected \"l1\", \"l2\" or \"linf\"");
    try {
        return parse_norm_kind(j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

ConvexSet read_shape(const Json& j, const std::string& path, std::size_t dim, NormKind norm)
{
    const Json& type = field(j, path, "type");
    if (!type.is_string()) fail(path + "/type", "expected a string");
    const std::string kind = type.get<std::string>();
    try {
        if (kind == "polyhedron") {
            const std::string rp = path + "/rows";
            std::vector<LinearInequality> rows;
            const Json& arr = read_array(field(j, path, "rows"), rp);
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string p = rp + "/" + std::to_string(i);
                LinearInequality row;
                row.normal = Functional(read_vector(field(arr[i], p, "a"), p + "/a", dim));
                row.offset = read_rational(field(arr[i], p, "b"), p + "/b");
                if (const Json* s = optional_field(arr[i], "strict")) {
                    if (!s->is_boolean()) fail(p + "/strict", "expected true or false");
                    row.strict = s->get<bool>();
                }
                rows.push_back(std::move(row));
            }
            return ConvexSet::polyhedron(dim, norm, std::move(rows));
        }
        if (kind == "strip") {
            const std::string fp = path + "/functionals";
            const Json& arr = read_array(field(j, path, "functionals"), fp);
            std::vector<Functional> fs;
            for (std::size_t i = 0; i < arr.size(); ++i)
                fs.emplace_back(read_vector(arr[i], fp + "/" + std::to_string(i), dim));
            std::vector<Vector> vectors;
            if (const Json* v = optional_field(j, "vectors")) {
                const std::string vp = path + "/vectors";
                read_array(*v, vp);
                if (v->size() != fs.size()) fail(vp, "needs one vector per functional");
                for (std::size_t i = 0; i < v->size(); ++i)
                    vectors.push_back(read_vector((*v)[i], vp + "/" + std::to_string(i), dim));
            }
            const char* key = nullptr;
            for (const char* k : {"radii", "radii_sq", "eps"}) {
                if (!optional_field(j, k)) continue;
                if (key) fail(path, "give exactly one of \"radii\", \"radii_sq\" or \"eps\"");
                key = k;
            }
            if (!key) fail(path, "missing \"radii\", \"radii_sq\" or \"eps\"");
            const Json& values = read_array(j.at(key), path + "/" + key);
            if (values.size() != fs.size()) fail(path + "/" + key, "needs one value per functional");
            std::vector<Rational> q;
            for (std::size_t i = 0; i < values.size(); ++i) {
                q.push_back(read_rational(values[i], path + "/" + key + "/" + std::to_string(i)));
                if (q.back().sign() <= 0) fail(path + "/" + key + "/" + std::to_string(i), "must be positive");
            }
            const std::string which = key;
            if (which == "eps") return ConvexSet::strip_from_epsilon(dim, norm, std::move(fs), q, std::move(vectors));
            std::vector<StripRow> rows;
            for (std::size_t i = 0; i < fs.size(); ++i)
                rows.push_back(StripRow{fs[i], which == "radii" ? Rational(q[i] * q[i]) : q[i]});
            return ConvexSet::strip(dim, norm, std::move(rows), std::move(vectors));
        }
        if (kind == "minkowski") {
            std::size_t inner_dim = dim;
            if (const Json* k = optional_field(j, "inner_dim")) {
                if (!k->is_number_unsigned() || k->get<std::size_t>() == 0)
                    fail(path + "/inner_dim", "expected a positive integer");
                inner_dim = k->get<std::size_t>();
                if (inner_dim > dim) fail(path + "/inner_dim", "exceeds the ambient dimension");
            }
            ConvexSet inner = read_shape(field(j, path, "inner"), path + "/inner", inner_dim, norm);
            const Rational radius = read_rational(field(j, path, "radius"), path + "/radius");
            std::optional<NormKind> ball;
            if (const Json* b = optional_field(j, "ball_norm")) ball = read_norm(*b, path + "/ball_norm");
            return ConvexSet::minkowski(dim, norm, std::move(inner), radius, ball);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        fail(path, e.what());
    }
    fail(path + "/type", "unknown set type '" + kind + "'");
}

std::string join_array(const Json& arr)
{
    std::string out;
    for (const auto& x : arr) out += (out.empty() ? "" : ",") + x.get<std::string>();
    return out;
}

}  // namespace

ConvexSet parse_set(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
    }
    try {
        const Json& dim_json = field(doc, "", "dim");
        if (!dim_json.is_number_unsigned() || dim_json.get<std::size_t>() == 0)
            fail("/dim", "expected a positive integer");
        const std::size_t dim = dim_json.get<std::size_t>();
        NormKind norm = NormKind::L2;
        if (const Json* n = optional_field(doc, "norm")) norm = read_norm(*n, "/norm");
        return read_shape(field(doc, "", "set"), "/set", dim, norm);
    } catch (const FieldError& e) {
        const int line = LineIndex(text).line_of(e.path);
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": field " + (e.path.empty() ? "/" : e.path) +
                                          ": " + e.message);
    }
}

ConvexSet load_set(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_set(buf.str());
    } catch (const Error& e) {
        throw Error(ErrorCode::Parse, path + ": " + std::string(e.what()).substr(std::string("Parse: ").size()));
    }
}

Vector parse_vector(std::string_view text)
{
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        coords.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Vector(std::move(coords));
}

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const Vector& v)
{
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

Json to_json(const Scalar& s)
{
    if (s.is_exact()) return to_json(s.exact());
    return s.value();
}

namespace {

Json shape_json(const ConvexSet& set)
{
    Json j;
    if (const auto* p = set.as_polyhedron()) {
        j["type"] = "polyhedron";
        j["rows"] = Json::array();
        for (const auto& r : p->rows)
            j["rows"].push_back({{"a", to_json(r.normal.coefficients())}, {"b", to_json(r.offset)}, {"strict", r.strict}});
    } else if (const auto* s = set.as_strip()) {
        j["type"] = "strip";
        j["functionals"] = Json::array();
        Json radii = Json::array();
        bool rational = true;
        for (const auto& r : s->rows) {
            j["functionals"].push_back(to_json(r.functional.coefficients()));
            if (auto root = exact_sqrt(r.radius_sq)) radii.push_back(to_json(*root));
            else rational = false;
        }
        if (rational) {
            j["radii"] = radii;
        } else {
            j["radii_sq"] = Json::array();
            for (const auto& r : s->rows) j["radii_sq"].push_back(to_json(r.radius_sq));
        }
        if (!s->vectors.empty()) {
            j["vectors"] = Json::array();
            for (const auto& v : s->vectors) j["vectors"].push_back(to_json(v));
        }
    } else if (const auto* m = set.as_minkowski()) {
        j["type"] = "minkowski";
        j["inner_dim"] = m->inner->dim();
        j["inner"] = shape_json(*m->inner);
        j["radius"] = to_json(m->radius);
        j["ball_norm"] = std::string(to_string(m->ball_norm));
    }
    return j;
}

}  // namespace

Json set_to_json(const ConvexSet& set)
{
    return Json{{"dim", set.dim()}, {"norm", std::string(to_string(set.norm()))}, {"set", shape_json(set)}};
}

Json to_json(const RayLength& len)
{
    Json j;
    switch (len.kind) {
    case RayLengthKind::Finite:
        j["kind"] = "finite";
        j["value"] = to_json(len.value);
        j["decimal"] = len.value.decimal();
        break;
    case RayLengthKind::Infinite: j["kind"] = "infinite"; break;
    case RayLengthKind::ExceedsCap: j["kind"] = "exceeds_cap"; break;
    }
    if (len.binding) j["binding"] = *len.binding + 1;
    return j;
}

Json to_json(const RecessionCone& cone)
{
    Json j;
    switch (cone.kind) {
    case RecessionCone::Kind::Rows: j["kind"] = "rows"; break;
    case RecessionCone::Kind::Kernel: j["kind"] = "kernel"; break;
    case RecessionCone::Kind::Embedded: j["kind"] = "embedded"; break;
    }
    j["ambient_dim"] = cone.ambient_dim;
    j["dimension"] = cone.dimension;
    auto functionals = [](const std::vector<Functional>& fs) {
        Json arr = Json::array();
        for (const auto& f : fs) arr.push_back(to_json(f.coefficients()));
        return arr;
    };
    j["inequalities"] = functionals(cone.inequalities);
    j["equalities"] = functionals(cone.equalities);
    j["basis"] = Json::array();
    for (const auto& b : cone.basis) j["basis"].push_back(to_json(b));
    j["sample_ray"] = cone.sample_ray ? to_json(*cone.sample_ray) : Json(nullptr);
    return j;
}

Json to_json(const CoveragePoint& p)
{
    return Json{{"sample", to_json(p.sample)},
                {"base", to_json(p.base)},
                {"step", to_json(p.step)},
                {"base_inside", p.base_inside},
                {"covered", p.covered}};
}

Json to_json(const ContradictionCertificate& c)
{
    return Json{{"type", "contradiction"},
                {"norm", std::string(to_string(c.norm))},
                {"anchor", to_json(c.anchor)},
                {"z0", to_json(c.z0)},
                {"u0", to_json(c.u0)},
                {"t0", to_json(c.t0)},
                {"a0", to_json(c.a0)},
                {"delta", to_json(c.delta)},
                {"delta_exact", c.delta_exact},
                {"t1", to_json(c.t1)},
                {"lambda", to_json(c.lambda)},
                {"lambda_exact", c.lambda_exact},
                {"xi", to_json(c.xi)},
                {"weights", Json::array({to_json(c.weight_xi), to_json(c.weight_ray)})}};
}

ContradictionCertificate certificate_from_json(const Json& j)
{
    auto rational = [&](const char* key) { return parse_rational(j.at(key).get<std::string>()); };
    auto vector = [&](const char* key) { return parse_vector(join_array(j.at(key))); };
    ContradictionCertificate c;
    c.norm = parse_norm_kind(j.at("norm").get<std::string>());
    c.anchor = vector("anchor");
    c.z0 = vector("z0");
    c.u0 = vector("u0");
    c.t0 = rational("t0");
    c.a0 = vector("a0");
    c.delta = rational("delta");
    c.delta_exact = j.at("delta_exact").get<bool>();
    c.t1 = rational("t1");
    c.lambda = rational("lambda");
    c.lambda_exact = j.at("lambda_exact").get<bool>();
    c.xi = vector("xi");
    c.weight_xi = parse_rational(j.at("weights").at(0).get<std::string>());
    c.weight_ray = parse_rational(j.at("weights").at(1).get<std::string>());
    return c;
}

Json to_json(const MidpointCertificate& c)
{
    return Json{{"type", "midpoint"},
                {"t", to_json(c.t)},
                {"index", c.index},
                {"n1", c.n1},
                {"n2", c.n2},
                {"u_n", to_json(c.u_n)},
                {"b_n", to_json(c.b_n)},
                {"complement", to_json(c.complement)},
                {"midpoint", to_json(c.midpoint)}};
}

Json to_json(const LimitDirection& limit)
{
    Json certs = Json::array();
    for (const auto& c : limit.certificates) certs.push_back(to_json(c));
    return Json{{"direction", to_json(limit.direction)},
                {"normalized", limit.normalized},
                {"cluster_size", limit.cluster_size},
                {"certificates", certs}};
}

Json to_json(const WitnessPoint& w)
{
    return Json{{"index", w.index},
                {"point", to_json(w.point)},
                {"coefficient", to_json(w.coefficient)},
                {"exact", w.exact},
                {"eps_half_sq", to_json(w.eps_half_sq)}};
}

Json to_json(const DenseRestrictionWitness& w)
{
    return Json{{"bound", to_json(w.bound)},
                {"a", to_json(w.a)},
                {"delta", to_json(w.delta)},
                {"b", to_json(w.b)},
                {"verified", w.verified}};
}

Json to_json(const RecessionReport& report, const ConvexSet& set)
{
    Json j;
    j["verdict"] = std::string(to_string(report.verdict));
    j["recession_cone"] = to_json(report.cone);
    if (report.ray) {
        j["ray"] = Json{{"base", to_json(report.ray->base)},
                        {"direction", to_json(report.ray->direction)},
                        {"normalized", report.ray->normalized(set.norm())}};
    } else {
        j["ray"] = nullptr;
    }
    Json certs = Json::object();
    if (report.certificate) {
        certs["contradiction"] = to_json(*report.certificate);
        certs["contradiction_verified"] = report.certificate->verify(set);
    }
    Json coverage = Json::array();
    for (const auto& p : report.coverage) coverage.push_back(to_json(p));
    certs["coverage"] = coverage;
    j["certificates"] = certs;
    return j;
}

}  // namespace recess::io
