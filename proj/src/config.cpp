#include "nlshock/config.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nlshock {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config: bad line: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        auto d = [&] { return std::stod(val); };
        if (section == "background") {
            if (key == "A1") c.A1 = d();
            else if (key == "A2") c.A2 = d();
            else if (key == "phi") c.phi = d();
            else throw std::runtime_error("config: unknown key " + key);
        } else if (section == "wedge") {
            if (key == "delta") c.delta = d();
            else if (key == "M") c.M = d();
            else if (key == "T") c.T = d();
            else if (key == "xi0") c.xi0 = d();
            else throw std::runtime_error("config: unknown key " + key);
        } else if (section == "grid") {
            if (key == "L") c.L = d();
            else if (key == "N") c.N = (int)std::stol(val);
            else if (key == "dt") c.dt = d();
            else if (key == "sponge_width") c.sponge_width = d();
            else if (key == "sponge_rate") c.sponge_rate = d();
            else if (key == "mollify") c.mollify = d();
            else throw std::runtime_error("config: unknown key " + key);
        } else if (section == "run") {
            if (key == "outdir") c.outdir = val;
            else throw std::runtime_error("config: unknown key " + key);
        } else {
            throw std::runtime_error("config: unknown section " + section);
        }
    }
    return c;
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string RunConfig::emit() const {
    std::ostringstream o;
    o << "[background]\n";
    o << "A1 = " << format_g17(A1) << "\n";
    o << "A2 = " << format_g17(A2) << "\n";
    o << "phi = " << format_g17(phi) << "\n";
    o << "[wedge]\n";
    o << "delta = " << format_g17(delta) << "\n";
    o << "M = " << format_g17(M) << "\n";
    o << "T = " << format_g17(T) << "\n";
    o << "xi0 = " << format_g17(xi0) << "\n";
    o << "[grid]\n";
    o << "L = " << format_g17(L) << "\n";
    o << "N = " << N << "\n";
    o << "dt = " << format_g17(dt) << "\n";
    o << "sponge_width = " << format_g17(sponge_width) << "\n";
    o << "sponge_rate = " << format_g17(sponge_rate) << "\n";
    o << "mollify = " << format_g17(mollify) << "\n";
    o << "[run]\n";
    o << "outdir = " << outdir << "\n";
    return o.str();
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_g17(row[i]);
        out << "\n";
    }
}

void write_metadata(const std::string& path, const RunConfig& cfg,
                    const std::map<std::string, std::string>& extra) {
    nlohmann::json j;
    j["config"] = cfg.emit();
    j["config_hash"] = std::to_string(std::hash<std::string>{}(cfg.emit()));
    j["branch_choices"] = {
        "gamma contours: straight segments mu->beta and conj(beta)->mu",
        "ln(1+rr*) pinned real positive at mu",
        "Sigma-mod logs pinned principal at the real-axis crossings",
        "a1 cycle encircles Sigma2, oriented so Im tau > 0",
        "auxiliary ray cut at arg lambda = -3pi/4",
    };
    for (const auto& [k, v] : extra) j[k] = v;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

} // namespace nlshock
