#include "htm/hash.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htm {

static std::string to_hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string content_hash(std::string_view data) { return to_hex16(fnv1a64(data)); }

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return content_hash(ss.str());
}

}  // namespace htm
