#include "grsq/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace grsq {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    return f;
}

}  // namespace

std::vector<Rat> parse_rational_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            strip(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (!item.empty()) out.push_back(Rat::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_rational_list(std::span<const Rat> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i].str();
    }
    return out;
}

std::vector<Rat> read_symbols(std::istream& is) {
    std::vector<Rat> out;
    std::string line;
    while (std::getline(is, line)) {
        std::string_view sv(line);
        if (std::size_t hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
        for (const Rat& x : parse_rational_list(sv)) out.push_back(x);
    }
    return out;
}

std::vector<Rat> read_symbols_file(const std::string& path) {
    std::ifstream f = open_in(path);
    return read_symbols(f);
}

void write_symbols(std::ostream& os, std::span<const Rat> xs) {
    for (const Rat& x : xs) os << x.str() << "\n";
}

void write_symbols_file(const std::string& path, std::span<const Rat> xs) {
    std::ofstream f = open_out(path);
    write_symbols(f, xs);
}

void save_code(std::ostream& os, const GrsCode& code) {
    os << "n = " << code.n << "\n";
    os << "k = " << code.k << "\n";
    os << "preset = " << to_string(code.preset) << "\n";
    os << "alphas = " << format_rational_list(code.alphas) << "\n";
    if (code.preset == Preset::Custom) os << "v = " << format_rational_list(code.v) << "\n";
}

void save_code_file(const std::string& path, const GrsCode& code) {
    std::ofstream f = open_out(path);
    save_code(f, code);
}

GrsCode load_code(std::istream& is) {
    std::optional<std::size_t> n, k;
    std::optional<Preset> preset;
    std::optional<std::vector<Rat>> alphas, v, v_prime;
    std::string line;
    while (std::getline(is, line)) {
        std::string_view sv(line);
        if (std::size_t hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
        sv = strip(sv);
        if (sv.empty()) continue;
        std::size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("bad code file line: '" + std::string(sv) + "'");
        std::string_view key = strip(sv.substr(0, eq));
        std::string_view value = strip(sv.substr(eq + 1));
        if (key == "n" || key == "k") {
            std::size_t parsed = 0;
            try {
                parsed = std::stoul(std::string(value));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer in code file: '" + std::string(value) + "'");
            }
            (key == "n" ? n : k) = parsed;
        } else if (key == "preset") {
            preset = preset_from_string(value);
        } else if (key == "alphas") {
            alphas = parse_rational_list(value);
        } else if (key == "v") {
            v = parse_rational_list(value);
        } else if (key == "v_prime") {
            v_prime = parse_rational_list(value);
        } else {
            throw std::invalid_argument("unknown code file key: '" + std::string(key) + "'");
        }
    }
    if (!n || !k || !preset || !alphas)
        throw std::invalid_argument("code file needs n, k, preset and alphas");
    if (*preset != Preset::Custom) {
        if (v || v_prime)
            throw std::invalid_argument("v / v_prime are only valid with the custom preset");
        return make_code(*n, *k, std::move(*alphas), *preset);
    }
    if (v && v_prime) throw std::invalid_argument("give either v or v_prime, not both");
    if (v) return make_code_with_v(*n, *k, std::move(*alphas), std::move(*v));
    if (v_prime) return make_code_with_v_prime(*n, *k, std::move(*alphas), std::move(*v_prime));
    throw std::invalid_argument("custom preset needs v or v_prime");
}

GrsCode load_code_file(const std::string& path) {
    std::ifstream f = open_in(path);
    return load_code(f);
}

}  // namespace grsq
