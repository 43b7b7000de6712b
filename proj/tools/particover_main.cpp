#include "particover/catalog.hpp"
#include "particover/lattice.hpp"
#include "particover/pipeline.hpp"
#include "particover/resultio.hpp"
#include "particover/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace particover;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string cache_path() {
    const char* env = std::getenv("PARTICOVER_CACHE");
    return (env && *env) ? env : "particover_cache.jsonl";
}

void print_report(const ResultRecord& rec, const std::vector<std::string>& notes,
                  bool want_sigma, bool want_rho, bool cached, const std::string& cert_file) {
    // The JSON line is the persisted record; a partial compute fills only one
    // value, so emitting it would serialize an unset field.
    if (want_sigma && want_rho) std::cout << to_json_line(rec) << "\n";
    std::cout << "spec:     " << rec.spec << (cached ? "  (cached result)" : "") << "\n";
    std::cout << "order:    " << rec.order << "\n";
    if (want_sigma)
        std::cout << "sigma:    " << rec.sigma.display() << "  [" << rec.sigma_source << "]\n";
    if (want_rho)
        std::cout << "rho:      " << rec.rho.display() << "  [" << rec.rho_source << "]\n";
    if (!rec.cert_digest.empty()) {
        std::cout << "cert:     " << rec.cert_digest;
        if (!cert_file.empty()) std::cout << "  (" << cert_file << ")";
        std::cout << "\n";
    }
    std::cout << "seconds:  " << rec.seconds << "\n";
    for (const std::string& n : notes) std::cout << "note:     " << n << "\n";
}

int cmd_compute(const GroupSpec& spec, bool flag_sigma, bool flag_rho,
                double budget_seconds, int threads, bool exact_only) {
    const bool want_sigma = flag_sigma || !flag_rho;
    const bool want_rho = flag_rho || !flag_sigma;

    ResultCache cache(cache_path());
    if (want_sigma && want_rho && !exact_only) {
        if (auto hit = cache.lookup(spec.to_string(), kVersion)) {
            print_report(*hit, {}, want_sigma, want_rho, true,
                         hit->cert_digest.empty() ? "" : cache.sidecar_path(hit->cert_digest));
            return kExitOk;
        }
    }

    ComputeOptions opt;
    opt.want_sigma = want_sigma;
    opt.want_rho = want_rho;
    opt.budget_seconds = budget_seconds;
    opt.threads = threads;
    opt.exact_only = exact_only;
    ComputeOutcome oc = compute_result(spec, opt);

    std::string cert_file;
    std::vector<std::string> notes = oc.notes;
    if (want_sigma && want_rho) {
        cache.append(oc.record);
        if (!oc.record.cert_digest.empty()) {
            cache.store_certificate(oc.record.cert_digest, oc.cert_parts);
            cert_file = cache.sidecar_path(oc.record.cert_digest);
        }
    } else {
        notes.push_back("partial request: result not cached");
    }
    print_report(oc.record, notes, want_sigma, want_rho, false, cert_file);
    return kExitOk;
}

int cmd_table(const std::string& which, double budget_seconds, int threads) {
    if (which != "paper") {
        std::cerr << "usage error: unknown table '" << which << "' (available: paper)\n";
        return kExitUsage;
    }
    ComputeOptions opt;
    opt.budget_seconds = budget_seconds;
    opt.threads = threads;
    TableReport report = run_reference_table(opt);

    std::cout << "group          quantity  expected        got             status\n";
    std::cout << "-----          --------  --------        ---             ------\n";
    for (const TableCell& c : report.cells) {
        std::ostringstream line;
        line.setf(std::ios::left);
        line.width(15);
        line << c.spec;
        line.width(10);
        line << c.quantity;
        line.width(16);
        line << c.expected.display();
        line.width(16);
        line << c.got.display();
        line << c.status;
        std::cout << line.str();
        if (!c.note.empty()) std::cout << "  -- " << c.note;
        std::cout << "\n";
    }
    int pass = 0, interval = 0, fail = 0;
    for (const TableCell& c : report.cells) {
        if (c.status == "PASS") ++pass;
        else if (c.status == "INTERVAL") ++interval;
        else ++fail;
    }
    std::cout << "summary: " << pass << " pass, " << interval << " interval, " << fail
              << " fail\n";
    return report.any_fail ? kExitFail : kExitOk;
}

int cmd_verify(const GroupSpec& spec, const std::string& cert_file) {
    std::ifstream in(cert_file, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open certificate file " << cert_file << "\n";
        return kExitFail;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parts = parse_certificate_text(buf.str());
    if (!parts || parts->empty()) {
        std::cerr << "error: certificate file is empty or malformed\n";
        return kExitFail;
    }
    if (!spec.buildable()) {
        std::cerr << "error: no element-level group for " << spec.to_string() << "\n";
        return kExitFail;
    }
    Group G = spec.build();
    std::vector<Subgroup> all = all_subgroups(G, 5000);

    std::vector<int> indices;
    for (std::size_t row = 0; row < parts->size(); ++row) {
        Bitset bits(G.order());
        for (int id : (*parts)[row]) {
            if (id < 0 || id >= G.order()) {
                std::cerr << "error: row " << row + 1 << " has element id " << id
                          << " outside [0, " << G.order() << ")\n";
                return kExitFail;
            }
            bits.set(id);
        }
        if (!is_subgroup(G, bits)) {
            std::cerr << "FAIL: row " << row + 1 << " is not a subgroup of " << spec.to_string()
                      << "\n";
            return kExitFail;
        }
        int idx = find_subgroup_index(all, bits);
        if (idx < 0) {
            std::cerr << "error: row " << row + 1 << " not found in the subgroup lattice\n";
            return kExitFail;
        }
        indices.push_back(idx);
    }
    const bool cover_ok = verify_cover(G, all, CoverCertificate{indices});
    const bool partition_ok = verify_partition(G, all, PartitionCertificate{indices});
    std::cout << "digest:    " << certificate_digest(*parts) << "\n";
    std::cout << "members:   " << parts->size() << "\n";
    std::cout << "cover:     " << (cover_ok ? "VALID" : "invalid") << "\n";
    std::cout << "partition: " << (partition_ok ? "VALID" : "invalid") << "\n";
    if (cover_ok || partition_ok) return kExitOk;
    std::cerr << "FAIL: neither a cover nor a partition of " << spec.to_string() << "\n";
    return kExitFail;
}

int cmd_subgroups(const GroupSpec& spec) {
    if (!spec.buildable()) {
        std::cerr << "error: no element-level group for " << spec.to_string() << "\n";
        return kExitFail;
    }
    Group G = spec.build();
    std::vector<Subgroup> all = all_subgroups(G, 5000);
    std::cout << "group " << spec.to_string() << ", order " << G.order() << ", " << all.size()
              << " subgroups\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::cout << i << "\t" << all[i].order << "\t";
        bool first = true;
        for (int id : all[i].bits.to_vector()) {
            if (!first) std::cout << ' ';
            std::cout << id;
            first = false;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group cover and partition toolkit"};
    app.set_version_flag("--version", particover::kVersion);
    app.require_subcommand(1);

    std::string spec_text;
    bool flag_sigma = false, flag_rho = false, exact_only = false;
    double budget_seconds = 60.0;
    int threads = 0;

    CLI::App* compute = app.add_subcommand("compute", "compute cover/partition sizes for a group");
    compute->add_option("spec", spec_text, "group spec, e.g. S4 or PSL2(7)")->required();
    compute->add_flag("--sigma", flag_sigma, "only the minimal cover size");
    compute->add_flag("--rho", flag_rho, "only the minimal partition size");
    compute->add_option("--budget-seconds", budget_seconds, "search budget per value")
        ->check(CLI::PositiveNumber);
    compute->add_option("--threads", threads, "solver threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    compute->add_flag("--exact-only", exact_only, "fail instead of reporting an interval");

    std::string which = "paper";
    CLI::App* table = app.add_subcommand("table", "recompute the published value table");
    table->add_option("which", which, "table name (paper)");
    table->add_option("--budget-seconds", budget_seconds, "search budget per value")
        ->check(CLI::PositiveNumber);
    table->add_option("--threads", threads, "solver threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    std::string cert_file;
    CLI::App* verify = app.add_subcommand("verify", "check a stored certificate against a group");
    verify->add_option("spec", spec_text, "group spec")->required();
    verify->add_option("certfile", cert_file, "certificate file, one subgroup per line")
        ->required();

    CLI::App* subgroups = app.add_subcommand("subgroups", "list every subgroup of a group");
    subgroups->add_option("spec", spec_text, "group spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    particover::GroupSpec spec;
    if (compute->parsed() || verify->parsed() || subgroups->parsed()) {
        try {
            spec = particover::parse_spec(spec_text);
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    try {
        if (compute->parsed())
            return cmd_compute(spec, flag_sigma, flag_rho, budget_seconds, threads, exact_only);
        if (table->parsed()) return cmd_table(which, budget_seconds, threads);
        if (verify->parsed()) return cmd_verify(spec, cert_file);
        if (subgroups->parsed()) return cmd_subgroups(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
