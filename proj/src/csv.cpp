#include "isac/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace isac {

void write_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {

std::string cache_path(const std::string& dir, const std::string& key) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key)));
    return dir + "/" + buf + ".txt";
}

}  // namespace

std::optional<QuadResult> cache_lookup(const std::string& dir, const std::string& key) {
    std::ifstream in(cache_path(dir, key));
    if (!in) return std::nullopt;
    std::string stored_key;
    if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
    QuadResult r;
    int conv = 0;
    std::string v, e;
    if (!(in >> v >> e >> conv)) return std::nullopt;
    r.value = std::strtod(v.c_str(), nullptr);
    r.error = std::strtod(e.c_str(), nullptr);
    r.converged = conv != 0;
    return r;
}

void cache_store(const std::string& dir, const std::string& key, const QuadResult& value) {
    std::filesystem::create_directories(dir);
    const std::string path = cache_path(dir, key);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        char v[64], e[64];
        std::snprintf(v, sizeof v, "%a", value.value);
        std::snprintf(e, sizeof e, "%a", value.error);
        out << key << "\n" << v << " " << e << " " << (value.converged ? 1 : 0) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace isac
