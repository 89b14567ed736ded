#include "core/specstring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace gaborlab {

namespace {

// "key=v1,v2,key2=v3,..." -> ordered key -> values map. A comma-separated
// token without '=' continues the previous key's value list.
std::map<std::string, std::vector<double>> parse_kv(const std::string& body,
                                                    const std::string& where) {
    std::map<std::string, std::vector<double>> out;
    std::string current_key;
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::string value_text = token;
        const auto eq = token.find('=');
        if (eq != std::string::npos) {
            current_key = token.substr(0, eq);
            value_text = token.substr(eq + 1);
            if (current_key.empty() || out.count(current_key))
                throw ParseError(where + ": bad or duplicate key in '" + body + "'");
            out[current_key] = {};
        } else if (current_key.empty()) {
            throw ParseError(where + ": expected key=value in '" + body + "'");
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(value_text, &used);
            if (used != value_text.size()) throw std::invalid_argument("trailing");
            out[current_key].push_back(v);
        } catch (const std::exception&) {
            throw ParseError(where + ": bad numeric value '" + value_text + "'");
        }
    }
    return out;
}

double single(const std::map<std::string, std::vector<double>>& kv, const std::string& key,
              const std::string& where) {
    const auto it = kv.find(key);
    if (it == kv.end() || it->second.size() != 1)
        throw ParseError(where + ": missing scalar parameter '" + key + "'");
    return it->second.front();
}

SampledWindow window_from_file(const std::string& path, const TimeGrid& grid) {
    std::ifstream in(path);
    if (!in) throw ParseError("file window: cannot open '" + path + "'");
    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double t = 0.0, v = 0.0;
        if (!(ls >> t >> v)) throw ParseError("file window: bad row '" + line + "'");
        rows.emplace_back(t, v);
    }
    if (rows.size() < 4) throw ParseError("file window: need at least 4 samples");
    std::sort(rows.begin(), rows.end());
    std::vector<double> xs, ys;
    xs.reserve(rows.size());
    ys.reserve(rows.size());
    for (const auto& [t, v] : rows) {
        if (!xs.empty() && !(t > xs.back()))
            throw ParseError("file window: duplicate time sample");
        xs.push_back(t);
        ys.push_back(v);
    }
    const CubicSpline spline(std::move(xs), std::move(ys));
    std::vector<cplx> values(static_cast<std::size_t>(grid.n));
    for (int j = 0; j < grid.n; ++j) values[static_cast<std::size_t>(j)] = spline(grid.t(j));
    return SampledWindow(grid, std::move(values));
}

} // namespace

SampledWindow make_window(const std::string& spec, const TimeGrid& grid) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "gauss") {
        const auto kv = parse_kv(body, "gauss");
        return sample(GaussianSpec{single(kv, "gamma", "gauss")}, grid);
    }
    if (head == "hermite") {
        const auto kv = parse_kv(body, "hermite");
        const double n = single(kv, "n", "hermite");
        if (n < 0 || n != std::floor(n)) throw ParseError("hermite: n must be a nonnegative integer");
        const double gamma = kv.count("gamma") ? single(kv, "gamma", "hermite") : 1.0;
        return sample(HermiteSpec{static_cast<int>(n), gamma}, grid);
    }
    if (head == "oddbump") {
        if (!body.empty()) throw ParseError("oddbump: takes no parameters");
        return sample(OddBumpSpec{}, grid);
    }
    if (head == "file") {
        if (body.empty()) throw ParseError("file window: missing path");
        return window_from_file(body, grid);
    }
    throw ParseError("unknown window spec '" + spec + "'");
}

Lattice make_lattice(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "sq") {
        const auto kv = parse_kv(body, "sq");
        const double delta = single(kv, "delta", "sq");
        if (!(delta > 0.0)) throw ParseError("sq: delta must be > 0");
        return Lattice(SymplecticMatrix(Mat::Identity(2, 2)), delta);
    }
    if (head == "sep") {
        const auto kv = parse_kv(body, "sep");
        const double alpha = single(kv, "alpha", "sep");
        const double beta = single(kv, "beta", "sep");
        if (!(alpha > 0.0) || !(beta > 0.0)) throw ParseError("sep: alpha, beta must be > 0");
        return Lattice::separable(alpha, beta);
    }
    if (head == "symp") {
        const auto kv = parse_kv(body, "symp");
        const double delta = single(kv, "delta", "symp");
        if (!(delta > 0.0)) throw ParseError("symp: delta must be > 0");
        const auto it = kv.find("S");
        if (it == kv.end() || it->second.size() != 4)
            throw ParseError("symp: S must have 4 row-major entries");
        const auto& e = it->second;
        Mat s(2, 2);
        s << e[0], e[1], e[2], e[3];
        if (!is_symplectic(s, 1e-6))
            throw NotSymplecticError("symp: S is not symplectic (det != 1)");
        return Lattice(SymplecticMatrix(s, 1e-6), delta);
    }
    throw ParseError("unknown lattice spec '" + spec + "'");
}

} // namespace gaborlab
