#ifndef NLSHOCK_CONFIG_HPP
#define NLSHOCK_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

namespace nlshock {

// Sectioned key=value run configuration. Values keep 17 significant digits
// through an emit/parse round trip.
struct RunConfig {
    // [background]
    double A1{1.5}, A2{1.5}, phi{0.0};
    // [wedge]
    double delta{0.51}, M{1.0}, T{50.0}, xi0{0.0};
    // [grid]
    double L{400.0};
    int N{1 << 14};
    double dt{2e-4};
    double sponge_width{60.0}, sponge_rate{40.0}, mollify{0.0};
    // [run]
    std::string outdir{"out"};

    static RunConfig parse(const std::string& text);
    static RunConfig load(const std::string& path);
    std::string emit() const;
};

// CSV writer with a fixed 17-significant-digit format
std::string format_g17(double v);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// config hash + constants record emitted next to every data file
void write_metadata(const std::string& path, const RunConfig& cfg,
                    const std::map<std::string, std::string>& extra);

} // namespace nlshock

#endif
