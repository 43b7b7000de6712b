#pragma once

#include <optional>
#include <string>
#include <vector>

namespace particover {

// One persisted sigma or rho outcome: an exact number, a marker ("inf" for
// uncoverable cyclic groups, "none" for unpartitionable ones), or an
// inclusive interval [lo, hi] when only bounds were established.
struct ValueEntry {
    enum class Kind { Number, Marker, Interval };
    Kind kind = Kind::Number;
    long long value = 0;      // Number
    std::string marker;       // Marker
    long long lo = 0, hi = 0; // Interval

    static ValueEntry number(long long v);
    static ValueEntry infinite();
    static ValueEntry none();
    static ValueEntry interval(long long lo, long long hi);

    bool is_number() const { return kind == Kind::Number; }
    std::string display() const; // "4", "inf", "none", "[2143, 4161]"
    bool operator==(const ValueEntry& o) const = default;
};

struct ResultRecord {
    std::string spec;
    long long order = 0;
    ValueEntry sigma;
    ValueEntry rho;
    std::string sigma_source;
    std::string rho_source;
    std::string cert_digest; // empty when no certificate was stored
    std::string version;
    double seconds = 0.0;

    bool operator==(const ResultRecord& o) const = default;
};

// One JSON object per line, field names exactly: spec, order, sigma, rho,
// sigma_source, rho_source, cert_digest, version, seconds.
std::string to_json_line(const ResultRecord& rec);
// nullopt on any malformed line (bad JSON, missing field, wrong type).
std::optional<ResultRecord> parse_json_line(const std::string& line);

// Canonical certificate text: members as rows of ascending element ids,
// rows sorted, one row per line, ids separated by single spaces. This is
// both the sidecar file format and the digest preimage.
std::string certificate_text(std::vector<std::vector<int>> parts);
// 16 hex digits: FNV-1a 64 over certificate_text(parts).
std::string certificate_digest(const std::vector<std::vector<int>>& parts);

// Newline-delimited record store. Appends rewrite through a temp file in the
// same directory followed by an atomic rename, so concurrent appenders can
// race but never interleave partial lines. Certificates live next to the
// cache as <digest>.cert sidecar files.
class ResultCache {
  public:
    explicit ResultCache(std::string path);
    const std::string& path() const { return path_; }

    // Every well-formed line, in file order; malformed lines are skipped
    // with a warning on stderr.
    std::vector<ResultRecord> read_all() const;
    // Latest record for the pair, so recomputations shadow older entries.
    std::optional<ResultRecord> lookup(const std::string& spec,
                                       const std::string& version) const;
    void append(const ResultRecord& rec) const;

    std::string sidecar_path(const std::string& digest) const;
    void store_certificate(const std::string& digest,
                           const std::vector<std::vector<int>>& parts) const;
    std::optional<std::vector<std::vector<int>>> load_certificate(const std::string& digest) const;

  private:
    std::string path_;
};

// Parses sidecar-format text (one subgroup per line, decimal element ids);
// nullopt when a token is not a number. Blank lines are ignored.
std::optional<std::vector<std::vector<int>>> parse_certificate_text(const std::string& text);

} // namespace particover
