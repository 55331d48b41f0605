#include "covers/textio.hpp"

#include <fstream>
#include <sstream>

namespace covers {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& why) {
    throw Error(Errc::parse_error,
                "line " + std::to_string(line) + ": " + why);
}

bool parse_integer(const std::string& token, long long& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

} // namespace

CoverSystem parse_system_text(const std::string& text) {
    std::vector<ResidueClass> classes;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string a_token, keyword, n_token, extra;
        if (!(fields >> a_token)) continue;      // blank line
        if (a_token.front() == '#') continue;    // comment
        fields >> keyword >> n_token;
        if (keyword != "mod" || n_token.empty())
            fail(line_number, "expected \"<residue> mod <modulus>\"");
        if (fields >> extra) fail(line_number, "trailing content after modulus");
        long long a = 0, n = 0;
        if (!parse_integer(a_token, a)) fail(line_number, "bad residue \"" + a_token + "\"");
        if (!parse_integer(n_token, n)) fail(line_number, "bad modulus \"" + n_token + "\"");
        if (n <= 0) fail(line_number, "modulus must be positive");
        classes.emplace_back(a, n);
    }
    return CoverSystem(std::move(classes));
}

CoverSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::bad_argument, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_system_text(buffer.str());
}

std::string serialize_system(const CoverSystem& system) {
    std::string out;
    for (const ResidueClass& c : system.classes()) {
        out += std::to_string(c.residue);
        out += " mod ";
        out += std::to_string(c.modulus);
        out += '\n';
    }
    return out;
}

} // namespace covers
