#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "isac/config.hpp"

namespace isac {

// CSV outputs start with '#' comment lines carrying the seed, the config hash
// and the code version, then a header row. Numeric cells use %.12g.
class CsvBuilder {
  public:
    CsvBuilder(const RunConfig& cfg, const std::string& header) {
        out_ << "# seed=" << cfg.mc.seed << " config=" << config_hash_hex(cfg)
             << " version=" << kCodeVersion << "\n";
        out_ << header << "\n";
        out_.precision(12);
    }

    template <class... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ","), first = false, out_ << cells), ...);
        out_ << "\n";
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

    std::string str() const { return out_.str(); }

  private:
    std::ostringstream out_;
};

void write_file(const std::string& path, const std::string& content);

// Analytic-result disk cache: key -> (value, error, converged) stored as
// hexfloats so cached and cold evaluations agree bit for bit.
std::optional<QuadResult> cache_lookup(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, const QuadResult& value);

}  // namespace isac
