#include "bubblegrid/text_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "bubblegrid/errors.hpp"

namespace bubblegrid {

namespace {

std::string strip_comment(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line;
}

std::int64_t parse_coord(const std::string& tok, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad coordinate '" + tok + "'");
    }
}

}  // namespace

ConfigFile parse_config(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    ConfigFile out;
    std::vector<Configuration::Entry> entries;
    std::set<LatticePoint> seen;

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(strip_comment(raw));
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "beta") {
                throw ParseError("line " + std::to_string(line_no) + ": expected 'beta <p>/<q>' header");
            }
            try {
                out.beta = Beta::parse(tok[1]);
            } catch (const DomainError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            have_header = true;
            continue;
        }
        if (tok.size() != 3 || (tok[2] != "A" && tok[2] != "B")) {
            throw ParseError("line " + std::to_string(line_no) + ": expected '<x> <y> <A|B>'");
        }
        const LatticePoint p{parse_coord(tok[0], line_no), parse_coord(tok[1], line_no)};
        if (!seen.insert(p).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate point " + tok[0] + " " + tok[1]);
        }
        entries.emplace_back(p, tok[2] == "A" ? Phase::A : Phase::B);
    }
    if (!have_header) throw ParseError("missing beta header");
    out.config = Configuration(std::move(entries));
    return out;
}

ConfigFile read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string write_config(const Beta& beta, const Configuration& config) {
    std::string out = "beta " + beta.to_string() + "\n";
    for (const auto& [p, ph] : config.entries()) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + " " + phase_char(ph) + "\n";
    }
    return out;
}

void write_config_file(const std::string& path, const Beta& beta, const Configuration& config) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << write_config(beta, config);
}

}  // namespace bubblegrid
