#include "core/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "core/network.hpp"
#include "core/units.hpp"

namespace drc {

namespace {

std::string trim(const std::string &s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool parse_double(const std::string &text, double &out) {
    if (text.empty())
        return false;
    const char *begin = text.c_str();
    char *end = nullptr;
    errno = 0;
    out = std::strtod(begin, &end);
    return end == begin + text.size() && errno == 0;
}

struct DirectKey {
    const char *name;
    double CircuitParams::*field;
    bool mhz; // value given in MHz, stored in GHz
};

constexpr std::array<DirectKey, 12> kDirectKeys = {{
    {"omega_a_ghz", &CircuitParams::omega_a, false},
    {"omega_b_ghz", &CircuitParams::omega_b, false},
    {"omega_x_max_ghz", &CircuitParams::omega_x_max, false},
    {"omega_y_max_ghz", &CircuitParams::omega_y_max, false},
    {"alpha_x_mhz", &CircuitParams::alpha_x, true},
    {"alpha_y_mhz", &CircuitParams::alpha_y, true},
    {"g_ax_mhz", &CircuitParams::g_ax, true},
    {"g_ay_mhz", &CircuitParams::g_ay, true},
    {"g_bx_mhz", &CircuitParams::g_bx, true},
    {"g_by_mhz", &CircuitParams::g_by, true},
    {"g_xy_mhz", &CircuitParams::g_xy, true},
    {"g_ab_mhz", &CircuitParams::g_ab, true},
}};

struct NetworkKey {
    const char *name;
    double CapacitanceNetwork::*field;
};

constexpr std::array<NetworkKey, 14> kNetworkKeys = {{
    {"C_a_fF", &CapacitanceNetwork::C_a},
    {"C_b_fF", &CapacitanceNetwork::C_b},
    {"C_x_fF", &CapacitanceNetwork::C_x},
    {"C_y_fF", &CapacitanceNetwork::C_y},
    {"C_ab_fF", &CapacitanceNetwork::C_ab},
    {"C_xy_fF", &CapacitanceNetwork::C_xy},
    {"C_ax_fF", &CapacitanceNetwork::C_ax},
    {"C_ay_fF", &CapacitanceNetwork::C_ay},
    {"C_bx_fF", &CapacitanceNetwork::C_bx},
    {"C_by_fF", &CapacitanceNetwork::C_by},
    {"L_a_nH", &CapacitanceNetwork::L_a},
    {"L_b_nH", &CapacitanceNetwork::L_b},
    {"EJ_x_ghz", &CapacitanceNetwork::EJ_x},
    {"EJ_y_ghz", &CapacitanceNetwork::EJ_y},
}};

const DirectKey *find_direct(const std::string &key) {
    for (const auto &k : kDirectKeys)
        if (key == k.name)
            return &k;
    return nullptr;
}

const NetworkKey *find_network(const std::string &key) {
    for (const auto &k : kNetworkKeys)
        if (key == k.name)
            return &k;
    return nullptr;
}

} // namespace

const std::vector<std::string> &direct_config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> v;
        for (const auto &k : kDirectKeys)
            v.emplace_back(k.name);
        return v;
    }();
    return keys;
}

CircuitParams parse_config_text(const std::string &text) {
    CircuitParams params = CircuitParams::baseline();
    CapacitanceNetwork net;
    std::map<std::string, int> seen;           // key -> first line
    int first_direct_line = 0, first_network_line = 0;
    int network_keys_seen = 0;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key=value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value_text = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("missing key before '='", line_no);
        if (value_text.find('=') != std::string::npos)
            throw parse_error("more than one '=' on the line", line_no);

        auto [it, inserted] = seen.emplace(key, line_no);
        if (!inserted)
            throw parse_error("duplicate key '" + key + "' (first on line " +
                                  std::to_string(it->second) + ")",
                              line_no);

        double value = 0.0;
        if (!parse_double(value_text, value))
            throw parse_error("cannot parse number '" + value_text + "'", line_no);

        if (const DirectKey *dk = find_direct(key)) {
            if (first_network_line)
                throw parse_error("circuit key '" + key +
                                      "' cannot be mixed with the network block "
                                      "(started on line " +
                                      std::to_string(first_network_line) + ")",
                                  line_no);
            if (!first_direct_line)
                first_direct_line = line_no;
            params.*(dk->field) = dk->mhz ? mhz_to_ghz(value) : value;
        } else if (const NetworkKey *nk = find_network(key)) {
            if (first_direct_line)
                throw parse_error("network key '" + key +
                                      "' cannot be mixed with circuit keys "
                                      "(first on line " +
                                      std::to_string(first_direct_line) + ")",
                                  line_no);
            if (!first_network_line)
                first_network_line = line_no;
            net.*(nk->field) = value;
            ++network_keys_seen;
        } else {
            throw parse_error("unknown key '" + key + "'", line_no);
        }
    }

    if (first_network_line) {
        if (network_keys_seen != static_cast<int>(kNetworkKeys.size())) {
            std::string missing;
            for (const auto &k : kNetworkKeys)
                if (!seen.count(k.name))
                    missing += missing.empty() ? k.name : std::string(", ") + k.name;
            throw parse_error("incomplete network block; missing: " + missing, 0);
        }
        params = params_from_network(net);
    }
    params.validate();
    return params;
}

CircuitParams load_config_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    if (f.bad())
        throw io_error("error reading config file: " + path);
    return parse_config_text(buf.str());
}

void params_set_key(CircuitParams &params, const std::string &key, double value) {
    const DirectKey *dk = find_direct(key);
    if (!dk)
        throw std::invalid_argument("unknown parameter key '" + key + "'");
    params.*(dk->field) = dk->mhz ? mhz_to_ghz(value) : value;
    params.validate();
}

double params_get_key(const CircuitParams &params, const std::string &key) {
    const DirectKey *dk = find_direct(key);
    if (!dk)
        throw std::invalid_argument("unknown parameter key '" + key + "'");
    const double v = params.*(dk->field);
    return dk->mhz ? ghz_to_mhz(v) : v;
}

} // namespace drc
