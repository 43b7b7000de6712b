#include "particover/resultio.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace particover {

using nlohmann::json;

ValueEntry ValueEntry::number(long long v) {
    ValueEntry e;
    e.kind = Kind::Number;
    e.value = v;
    return e;
}

ValueEntry ValueEntry::infinite() {
    ValueEntry e;
    e.kind = Kind::Marker;
    e.marker = "inf";
    return e;
}

ValueEntry ValueEntry::none() {
    ValueEntry e;
    e.kind = Kind::Marker;
    e.marker = "none";
    return e;
}

ValueEntry ValueEntry::interval(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("ValueEntry: interval bounds out of order");
    ValueEntry e;
    e.kind = Kind::Interval;
    e.lo = lo;
    e.hi = hi;
    return e;
}

std::string ValueEntry::display() const {
    switch (kind) {
    case Kind::Number:
        return std::to_string(value);
    case Kind::Marker:
        return marker;
    case Kind::Interval:
        return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    }
    return "?";
}

namespace {

json value_to_json(const ValueEntry& e) {
    switch (e.kind) {
    case ValueEntry::Kind::Number:
        return e.value;
    case ValueEntry::Kind::Marker:
        return e.marker;
    case ValueEntry::Kind::Interval:
        return json::array({e.lo, e.hi});
    }
    return nullptr;
}

std::optional<ValueEntry> value_from_json(const json& j) {
    if (j.is_number_integer()) return ValueEntry::number(j.get<long long>());
    if (j.is_string()) {
        std::string m = j.get<std::string>();
        if (m == "inf") return ValueEntry::infinite();
        if (m == "none") return ValueEntry::none();
        return std::nullopt;
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        long long lo = j[0].get<long long>(), hi = j[1].get<long long>();
        if (lo > hi) return std::nullopt;
        return ValueEntry::interval(lo, hi);
    }
    return std::nullopt;
}

} // namespace

std::string to_json_line(const ResultRecord& rec) {
    json j;
    j["spec"] = rec.spec;
    j["order"] = rec.order;
    j["sigma"] = value_to_json(rec.sigma);
    j["rho"] = value_to_json(rec.rho);
    j["sigma_source"] = rec.sigma_source;
    j["rho_source"] = rec.rho_source;
    j["cert_digest"] = rec.cert_digest;
    j["version"] = rec.version;
    j["seconds"] = rec.seconds;
    return j.dump();
}

std::optional<ResultRecord> parse_json_line(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    for (const char* field :
         {"spec", "order", "sigma", "rho", "sigma_source", "rho_source", "cert_digest", "version",
          "seconds"})
        if (!j.contains(field)) return std::nullopt;
    if (!j["spec"].is_string() || !j["order"].is_number_integer() ||
        !j["sigma_source"].is_string() || !j["rho_source"].is_string() ||
        !j["cert_digest"].is_string() || !j["version"].is_string() ||
        !j["seconds"].is_number())
        return std::nullopt;
    auto sigma = value_from_json(j["sigma"]);
    auto rho = value_from_json(j["rho"]);
    if (!sigma || !rho) return std::nullopt;
    ResultRecord rec;
    rec.spec = j["spec"].get<std::string>();
    rec.order = j["order"].get<long long>();
    rec.sigma = *sigma;
    rec.rho = *rho;
    rec.sigma_source = j["sigma_source"].get<std::string>();
    rec.rho_source = j["rho_source"].get<std::string>();
    rec.cert_digest = j["cert_digest"].get<std::string>();
    rec.version = j["version"].get<std::string>();
    rec.seconds = j["seconds"].get<double>();
    return rec;
}

std::string certificate_text(std::vector<std::vector<int>> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end());
    std::string text;
    for (const auto& part : parts) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i) text += ' ';
            text += std::to_string(part[i]);
        }
        text += '\n';
    }
    return text;
}

std::string certificate_digest(const std::vector<std::vector<int>>& parts) {
    const std::string text = certificate_text(parts);
    std::uint64_t h = 14695981039346656037ULL; // FNV-1a 64 offset basis
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::optional<std::vector<std::vector<int>>> parse_certificate_text(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream tokens(line);
        std::vector<int> part;
        std::string tok;
        while (tokens >> tok) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size() || v < 0) return std::nullopt;
                part.push_back(v);
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (part.empty()) return std::nullopt;
        parts.push_back(std::move(part));
    }
    return parts;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) throw std::invalid_argument("ResultCache: empty path");
}

std::vector<ResultRecord> ResultCache::read_all() const {
    std::vector<ResultRecord> out;
    std::ifstream in(path_);
    if (!in) return out; // a missing cache is an empty cache
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto rec = parse_json_line(line);
        if (!rec) {
            std::fprintf(stderr, "warning: %s:%d: skipping malformed cache line\n", path_.c_str(),
                         lineno);
            continue;
        }
        out.push_back(std::move(*rec));
    }
    return out;
}

std::optional<ResultRecord> ResultCache::lookup(const std::string& spec,
                                                const std::string& version) const {
    std::optional<ResultRecord> found;
    for (ResultRecord& rec : read_all())
        if (rec.spec == spec && rec.version == version) found = std::move(rec);
    return found;
}

namespace {

void atomic_write(const std::string& dest, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(dest);
    fs::path dir = target.parent_path();
    static std::atomic<unsigned> tmp_seq{0};
    std::string tmp = ((dir.empty() ? fs::path(".") : dir) /
                       (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                        std::to_string(tmp_seq.fetch_add(1))))
                          .string();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open temp file " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write to " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("rename " + tmp + " -> " + dest + ": " + ec.message());
    }
}

} // namespace

void ResultCache::append(const ResultRecord& rec) const {
    std::string content;
    {
        std::ifstream in(path_, std::ios::binary);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            content = buf.str();
        }
    }
    if (!content.empty() && content.back() != '\n') content += '\n';
    content += to_json_line(rec);
    content += '\n';
    atomic_write(path_, content);
}

std::string ResultCache::sidecar_path(const std::string& digest) const {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(path_).parent_path();
    return ((dir.empty() ? fs::path(".") : dir) / (digest + ".cert")).string();
}

void ResultCache::store_certificate(const std::string& digest,
                                    const std::vector<std::vector<int>>& parts) const {
    if (certificate_digest(parts) != digest)
        throw std::invalid_argument("store_certificate: digest does not match the parts");
    atomic_write(sidecar_path(digest), certificate_text(parts));
}

std::optional<std::vector<std::vector<int>>>
ResultCache::load_certificate(const std::string& digest) const {
    std::ifstream in(sidecar_path(digest), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_certificate_text(buf.str());
}

} // namespace particover
