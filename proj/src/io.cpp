#include "hyperlsh/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperlsh {

using nlohmann::json;

namespace {

[[noreturn]] void data_error(const std::string& msg) { throw std::runtime_error(msg); }

std::string model_name(Model m) { return m == Model::ball ? "ball" : "halfspace"; }

Model model_from_name(const std::string& s) {
    if (s == "ball") return Model::ball;
    if (s == "halfspace") return Model::halfspace;
    data_error("unknown model tag: " + s);
}

std::string hex_encode(const std::string& raw) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size() * 2);
    for (unsigned char b : raw) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::string hex_decode(const std::string& hex) {
    if (hex.size() % 2 != 0) data_error("index blob: odd hex key length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        data_error("index blob: bad hex digit");
    };
    std::string out(hex.size() / 2, '\0');
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<char>(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    return out;
}

json dataset_to_json(const Dataset& data) {
    json j;
    j["model"] = model_name(data.model);
    j["dim"] = data.dim;
    j["coords"] = data.coords;
    j["ids"] = data.ids;
    return j;
}

Dataset dataset_from_json(const json& j) {
    Dataset data;
    data.model = model_from_name(j.at("model").get<std::string>());
    data.dim = j.at("dim").get<std::size_t>();
    data.coords = j.at("coords").get<std::vector<std::vector<double>>>();
    data.ids = j.at("ids").get<std::vector<std::uint64_t>>();
    validate_dataset(data);
    return data;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_nan(const json& j) {
    return j.is_number() ? j.get<double>() : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_points_jsonl(std::ostream& os, const Dataset& data) {
    validate_dataset(data);
    for (std::size_t i = 0; i < data.size(); ++i) {
        json rec;
        rec["model"] = model_name(data.model);
        rec["coords"] = data.coords[i];
        rec["id"] = data.ids[i];
        os << rec.dump() << '\n';
    }
}

Dataset read_points_jsonl(std::istream& is) {
    Dataset data;
    bool first = true;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            data_error("point file line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            Model m = model_from_name(rec.at("model").get<std::string>());
            auto coords = rec.at("coords").get<std::vector<double>>();
            auto id = rec.at("id").get<std::uint64_t>();
            if (first) {
                data.model = m;
                data.dim = coords.size();
                first = false;
            } else if (m != data.model) {
                data_error("point file line " + std::to_string(line_no) + ": mixed models");
            }
            data.coords.push_back(std::move(coords));
            data.ids.push_back(id);
        } catch (const json::exception& e) {
            data_error("point file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    try {
        validate_dataset(data);
    } catch (const std::exception& e) {
        data_error(std::string("point file: ") + e.what());
    }
    return data;
}

void save_points(const std::string& path, const Dataset& data) {
    std::ofstream os(path);
    if (!os) data_error("cannot open for writing: " + path);
    write_points_jsonl(os, data);
    if (!os) data_error("write failed: " + path);
}

Dataset load_points(const std::string& path) {
    std::ifstream is(path);
    if (!is) data_error("cannot open: " + path);
    return read_points_jsonl(is);
}

void write_rho_csv(std::ostream& os, std::size_t d, std::size_t n, double R_hyp, double r,
                   std::uint64_t seed, const std::vector<RhoRow>& rows) {
    os << "d,n,R_hyp,r,c,p1_hat,p2_hat,rho_hat,one_over_c,n_near,n_far,seed\n";
    for (const RhoRow& row : rows) {
        const RhoEstimate& e = row.estimate;
        os << d << ',' << n << ',' << format_double(R_hyp) << ',' << format_double(r) << ','
           << format_double(e.c) << ',' << format_double(e.p1_hat) << ','
           << format_double(e.p2_hat) << ',' << format_double(e.rho_hat) << ','
           << format_double(1.0 / e.c) << ',' << e.n_near_pairs << ',' << e.n_far_pairs << ','
           << seed << '\n';
    }
}

std::string index_to_json(const LshIndex& index) {
    json j;
    j["format"] = "hyperlsh-index";
    j["version"] = 1;
    j["model"] = model_name(index.model);
    j["dim"] = index.dim;
    j["K"] = index.params.K;
    j["L"] = index.params.L;
    j["r"] = index.params.r;
    j["c"] = index.params.c;
    j["p1"] = index.p1;
    j["p2"] = index.p2;
    j["rho"] = finite_or_null(index.rho);
    j["sampler_R"] = index.sampler_R;
    if (index.dim == 2) {
        json arr = json::array();
        for (const Geodesic& g : index.geodesics) arr.push_back(json::array({g.t, g.theta}));
        j["geodesics"] = std::move(arr);
    } else {
        json arr = json::array();
        for (const HdHasher& h : index.hashers) {
            json one;
            one["row"] = h.projection.weights;
            one["sampler_R"] = h.sampler_R;
            one["t"] = h.geodesic.t;
            one["theta"] = h.geodesic.theta;
            arr.push_back(std::move(one));
        }
        j["hashers"] = std::move(arr);
    }
    j["points"] = dataset_to_json(index.data);
    json tables = json::array();
    for (const auto& table : index.tables) {
        json t = json::array();
        for (const auto& [key, bucket] : table) t.push_back(json::array({hex_encode(key), bucket}));
        tables.push_back(std::move(t));
    }
    j["tables"] = std::move(tables);
    return j.dump();
}

LshIndex index_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        data_error(std::string("index blob: ") + e.what());
    }
    LshIndex index;
    try {
        if (j.at("format").get<std::string>() != "hyperlsh-index")
            data_error("index blob: wrong format tag");
        if (j.at("version").get<int>() != 1) data_error("index blob: unsupported version");
        index.model = model_from_name(j.at("model").get<std::string>());
        index.dim = j.at("dim").get<std::size_t>();
        index.params.K = j.at("K").get<std::size_t>();
        index.params.L = j.at("L").get<std::size_t>();
        index.params.r = j.at("r").get<double>();
        index.params.c = j.at("c").get<double>();
        index.p1 = j.at("p1").get<double>();
        index.p2 = j.at("p2").get<double>();
        index.rho = number_or_nan(j.at("rho"));
        index.sampler_R = j.at("sampler_R").get<double>();
        if (index.dim == 2) {
            for (const json& g : j.at("geodesics"))
                index.geodesics.push_back(Geodesic::from_polar(g.at(0).get<double>(), g.at(1).get<double>()));
        } else {
            for (const json& one : j.at("hashers")) {
                HdHasher h;
                h.projection.source_dim = index.dim - 1;
                h.projection.target_dim = 1;
                h.projection.scale = 1.0;
                h.projection.weights = one.at("row").get<std::vector<double>>();
                if (h.projection.weights.size() != index.dim - 1)
                    data_error("index blob: projection row width differs from dimension");
                h.sampler_R = one.at("sampler_R").get<double>();
                h.geodesic = Geodesic::from_polar(one.at("t").get<double>(), one.at("theta").get<double>());
                index.hashers.push_back(std::move(h));
            }
        }
        index.data = dataset_from_json(j.at("points"));
        for (const json& t : j.at("tables")) {
            std::map<std::string, std::vector<std::uint32_t>> table;
            for (const json& entry : t)
                table[hex_decode(entry.at(0).get<std::string>())] =
                    entry.at(1).get<std::vector<std::uint32_t>>();
            index.tables.push_back(std::move(table));
        }
    } catch (const json::exception& e) {
        data_error(std::string("index blob: ") + e.what());
    }
    std::size_t expect = index.params.K * index.params.L;
    std::size_t have = index.dim == 2 ? index.geodesics.size() : index.hashers.size();
    if (have != expect) data_error("index blob: hasher count differs from K * L");
    if (index.tables.size() != index.params.L) data_error("index blob: table count differs from L");
    finalize_index(index);
    return index;
}

void save_index(const std::string& path, const LshIndex& index) {
    std::ofstream os(path, std::ios::binary);
    if (!os) data_error("cannot open for writing: " + path);
    os << index_to_json(index) << '\n';
    if (!os) data_error("write failed: " + path);
}

LshIndex load_index(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) data_error("cannot open: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return index_from_json(buf.str());
}

}  // namespace hyperlsh
