#include "pickspace/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pickspace/parse.hpp"

namespace pickspace {

Json poly_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& [alpha, c] : p.terms()) {
        Json rec;
        rec["exponents"] = alpha.exponents();
        rec["re"] = c.real();
        rec["im"] = c.imag();
        arr.push_back(std::move(rec));
    }
    return arr;
}

Polynomial poly_from_json(const Json& j, int expected_dim) {
    if (!j.is_array()) throw std::invalid_argument("polynomial json: expected an array of records");
    int dim = expected_dim;
    if (dim < 0) {
        if (j.empty()) throw std::invalid_argument("polynomial json: cannot infer dimension of []");
        dim = static_cast<int>(j.front().at("exponents").size());
    }
    Polynomial p(dim);
    for (const auto& rec : j) {
        const auto exps = rec.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != dim)
            throw std::invalid_argument("polynomial json: exponent tuple of wrong length");
        const double re = rec.value("re", 0.0);
        const double im = rec.value("im", 0.0);
        p.add_term(MultiIndex(exps), Complex(re, im));
    }
    return p;
}

Json space_to_json(const SpaceSpec& s) {
    if (s.kind == SpaceSpec::Kind::DruryArvesonExact) {
        Json j;
        j["kind"] = "h2";
        j["dim"] = s.dim;
        return j;
    }
    Json w;
    w["kind"] = s.weight.kind_name();
    if (s.weight.kind() == RadialWeight::Kind::Standard) w["a"] = s.weight.a();
    Json j;
    j["dim"] = s.dim;
    j["s"] = s.s;
    j["weight"] = std::move(w);
    return j;
}

SpaceSpec space_from_json(const Json& j) {
    if (j.contains("kind") && j.at("kind").get<std::string>() == "h2")
        return SpaceSpec::drury_arveson(j.at("dim").get<int>());
    const int dim = j.at("dim").get<int>();
    const double s = j.at("s").get<double>();
    RadialWeight w = RadialWeight::one();
    if (j.contains("weight")) {
        const auto& jw = j.at("weight");
        const std::string kind = jw.at("kind").get<std::string>();
        if (kind == "one") {
            w = RadialWeight::one();
        } else if (kind == "standard") {
            w = RadialWeight::standard(jw.at("a").get<double>());
        } else if (kind == "tabulated") {
            w = RadialWeight::tabulated(jw.at("moments").get<std::vector<double>>());
        } else {
            throw std::invalid_argument("space json: unknown weight kind '" + kind + "'");
        }
    }
    return SpaceSpec::besov(dim, s, std::move(w));
}

Json pointset_to_json(const PointSet& pts) {
    Json j;
    j["dim"] = pts.dim();
    if (pts.seed()) j["seed"] = *pts.seed();
    Json arr = Json::array();
    for (const auto& p : pts.points()) {
        Json point = Json::array();
        for (const auto& c : p) point.push_back(Json::array({c.real(), c.imag()}));
        arr.push_back(std::move(point));
    }
    j["points"] = std::move(arr);
    return j;
}

PointSet pointset_from_json(const Json& j) {
    const int dim = j.at("dim").get<int>();
    std::vector<Point> pts;
    for (const auto& jp : j.at("points")) {
        Point p;
        for (const auto& jc : jp) p.emplace_back(jc.at(0).get<double>(), jc.at(1).get<double>());
        pts.push_back(std::move(p));
    }
    std::optional<std::uint64_t> seed;
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    return PointSet(dim, std::move(pts), seed);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

// "@path" arguments read their content from a file
std::string expand_file_arg(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream is(arg.substr(1));
    if (!is) throw std::invalid_argument("cannot read config file " + arg.substr(1));
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

SpaceSpec parse_space_arg(const std::string& raw) {
    const std::string arg = expand_file_arg(raw);
    if (!arg.empty() && (arg.front() == '{')) return space_from_json(Json::parse(arg));
    const auto parts = split(arg, ':');
    const std::string& name = parts.front();
    try {
        if (name == "da" || name == "h2") {
            if (parts.size() != 2) throw std::invalid_argument("expected da:<d>");
            return SpaceSpec::drury_arveson(std::stoi(parts[1]));
        }
        if (name == "besov_da") {
            if (parts.size() != 2) throw std::invalid_argument("expected besov_da:<d>");
            return SpaceSpec::besov_da(std::stoi(parts[1]));
        }
        if (name == "hardy") {
            if (parts.size() != 2) throw std::invalid_argument("expected hardy:<d>");
            return SpaceSpec::hardy(std::stoi(parts[1]));
        }
        if (name == "dirichlet") return SpaceSpec::dirichlet();
        if (name == "bergman") {
            if (parts.size() != 2) throw std::invalid_argument("expected bergman:<d>");
            return SpaceSpec::bergman(std::stoi(parts[1]));
        }
        if (name == "besov") {
            if (parts.size() == 3)
                return SpaceSpec::besov(std::stoi(parts[1]), std::stod(parts[2]), RadialWeight::one());
            if (parts.size() == 4)
                return SpaceSpec::besov(std::stoi(parts[1]), std::stod(parts[2]),
                                        RadialWeight::standard(std::stod(parts[3])));
            throw std::invalid_argument("expected besov:<d>:<s>[:<a>]");
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("space '" + arg + "': " + e.what());
    }
    throw std::invalid_argument("unknown space '" + arg +
                                "' (expected JSON or da:/hardy:/dirichlet/bergman:/besov:)");
}

KernelSpec parse_kernel_arg(const std::string& raw) {
    const std::string arg = expand_file_arg(raw);
    if (!arg.empty() && arg.front() == '{') {
        const Json j = Json::parse(arg);
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "drury_arveson" || kind == "da")
            return KernelSpec::drury_arveson(j.at("dim").get<int>());
        if (kind == "szego") return KernelSpec::szego();
        if (kind == "dirichlet") return KernelSpec::dirichlet();
        if (kind == "power")
            return KernelSpec::power(j.at("dim").get<int>(), j.at("beta").get<double>());
        if (kind == "from_space")
            return KernelSpec::from_space(space_from_json(j.at("space")),
                                          j.at("degree").get<int>());
        throw std::invalid_argument("kernel json: unknown kind '" + kind + "'");
    }
    const auto parts = split(arg, ':');
    const std::string& name = parts.front();
    try {
        if (name == "da" || name == "drury_arveson") {
            if (parts.size() != 2) throw std::invalid_argument("expected da:<d>");
            return KernelSpec::drury_arveson(std::stoi(parts[1]));
        }
        if (name == "szego") return KernelSpec::szego();
        if (name == "dirichlet") return KernelSpec::dirichlet();
        if (name == "power") {
            if (parts.size() != 3) throw std::invalid_argument("expected power:<d>:<beta>");
            return KernelSpec::power(std::stoi(parts[1]), std::stod(parts[2]));
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("kernel '" + arg + "': " + e.what());
    }
    throw std::invalid_argument("unknown kernel '" + arg +
                                "' (expected JSON or da:/szego/dirichlet/power:)");
}

Polynomial parse_poly_arg(const std::string& raw, int dim) {
    const std::string arg = expand_file_arg(raw);
    std::size_t i = 0;
    while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
    if (i < arg.size() && arg[i] == '[') return poly_from_json(Json::parse(arg), dim);
    return parse_polynomial(arg, dim);
}

}  // namespace pickspace
