#include "particover/solver.hpp"

#include "particover/predicates.hpp"
#include "particover/util.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace particover {

namespace {

void check_budget(const SearchBudget& b) {
    if (b.max_nodes <= 0) throw std::invalid_argument("SearchBudget: max_nodes must be positive");
    if (!(b.max_seconds > 0)) throw std::invalid_argument("SearchBudget: max_seconds must be positive");
    if (b.thread_count <= 0) throw std::invalid_argument("SearchBudget: thread_count must be positive");
}

constexpr long long kInf = std::numeric_limits<long long>::max();

// Cross-thread search state: node accounting, the monotone incumbent, and the
// minimum lower bound among subtrees abandoned when the budget ran out (any
// solution missed by the truncated search has at least that many members).
struct SharedSearch {
    std::atomic<long long> nodes{0};
    long long max_nodes = kInf;
    std::chrono::steady_clock::time_point deadline;
    std::atomic<bool> stop{false};
    std::atomic<long long> best_val{kInf};
    std::vector<int> best_members;
    std::mutex best_mtx;
    std::atomic<long long> abandoned_min{kInf};

    // Counts one node; true once the budget is exhausted.
    bool tick() {
        long long k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (k > max_nodes)
            stop.store(true, std::memory_order_relaxed);
        else if ((k & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
            stop.store(true, std::memory_order_relaxed);
        return stop.load(std::memory_order_relaxed);
    }
    bool stopped() const { return stop.load(std::memory_order_relaxed); }
    long long best() const { return best_val.load(std::memory_order_relaxed); }

    // members must already be mapped to subgroup-list indices and sorted.
    void offer(long long size, const std::vector<int>& members) {
        if (size >= best()) return;
        std::lock_guard<std::mutex> lk(best_mtx);
        if (size < best_val.load(std::memory_order_relaxed)) {
            best_members = members;
            best_val.store(size, std::memory_order_relaxed);
        }
    }
    void abandon(long long lb) {
        long long cur = abandoned_min.load(std::memory_order_relaxed);
        while (lb < cur &&
               !abandoned_min.compare_exchange_weak(cur, lb, std::memory_order_relaxed)) {
        }
    }
};

void arm(SharedSearch& S, const SearchBudget& b) {
    S.max_nodes = b.max_nodes;
    S.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(b.max_seconds));
}

// ---------------------------------------------------------------------------
// Minimal cover search.
// ---------------------------------------------------------------------------

struct SigmaCtx {
    const Group* G = nullptr;
    int n = 0;
    std::vector<int> max_all_idx;        // maximal subgroup -> index in `all`
    std::vector<const Bitset*> max_bits; // members of each maximal subgroup
    std::vector<int> max_order;
    std::vector<int> by_order;           // maximal ids sorted by (order desc, id asc)
    int M = 0;
    int words = 0;                       // 64-bit words per element membership mask
    std::vector<std::uint64_t> mask;     // n * words; bit j = element lies in maximal j
    std::vector<int> mask_count;         // maximals containing each element
    std::vector<int> clique_scan;        // nonidentity ids by (mask_count asc, id asc)
    long long root_lb = 0;
};

bool mask_disjoint(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i] & b[i]) return false;
    return true;
}

SigmaCtx build_sigma_ctx(const Group& G, const std::vector<Subgroup>& all) {
    SigmaCtx C;
    C.G = &G;
    C.n = G.order();
    std::vector<Subgroup> maxs = maximal_subgroups(G, all);
    C.M = int(maxs.size());
    C.words = (C.M + 63) / 64;
    C.max_bits.reserve(C.M);
    for (const Subgroup& m : maxs) {
        int idx = find_subgroup_index(all, m.bits);
        if (idx < 0) throw std::logic_error("sigma: maximal subgroup missing from lattice");
        C.max_all_idx.push_back(idx);
        C.max_bits.push_back(&all[idx].bits);
        C.max_order.push_back(m.order);
    }
    C.by_order.resize(C.M);
    for (int j = 0; j < C.M; ++j) C.by_order[j] = j;
    std::sort(C.by_order.begin(), C.by_order.end(), [&](int a, int b) {
        if (C.max_order[a] != C.max_order[b]) return C.max_order[a] > C.max_order[b];
        return a < b;
    });
    C.mask.assign(std::size_t(C.n) * C.words, 0);
    C.mask_count.assign(C.n, 0);
    for (int j = 0; j < C.M; ++j) {
        const Bitset& bits = *C.max_bits[j];
        for (int e = bits.first_set(); e >= 0; e = bits.next_set(e)) {
            C.mask[std::size_t(e) * C.words + (j >> 6)] |= 1ULL << (j & 63);
            ++C.mask_count[e];
        }
    }
    for (int e = 1; e < C.n; ++e) {
        if (C.mask_count[e] == 0)
            throw std::logic_error("sigma: element outside every maximal subgroup");
        C.clique_scan.push_back(e);
    }
    std::sort(C.clique_scan.begin(), C.clique_scan.end(), [&](int a, int b) {
        if (C.mask_count[a] != C.mask_count[b]) return C.mask_count[a] < C.mask_count[b];
        return a < b;
    });
    return C;
}

// Greedy set of uncovered elements no two of which share a maximal subgroup;
// each needs its own cover member, so the count is a lower bound.
int sigma_clique(const SigmaCtx& C, const Bitset& covered, std::vector<std::uint64_t>& acc) {
    acc.assign(C.words, 0);
    int cnt = 0;
    for (int e : C.clique_scan) {
        if (covered.test(e)) continue;
        const std::uint64_t* m = &C.mask[std::size_t(e) * C.words];
        if (!mask_disjoint(m, acc.data(), C.words)) continue;
        for (int i = 0; i < C.words; ++i) acc[i] |= m[i];
        ++cnt;
    }
    return cnt;
}

long long sigma_bound(const SigmaCtx& C, const Bitset& covered, int covered_cnt,
                      std::vector<std::uint64_t>& acc) {
    long long uncov = C.n - covered_cnt;
    long long maxcov = 0;
    for (int j = 0; j < C.M; ++j) {
        long long rem = C.max_order[j] - C.max_bits[j]->count_and(covered);
        if (rem > maxcov) maxcov = rem;
    }
    if (maxcov == 0) return kInf; // nothing can extend the cover
    long long by_count = ceil_div(uncov, maxcov);
    long long by_clique = sigma_clique(C, covered, acc);
    return std::max(by_count, by_clique);
}

void sigma_offer(const SigmaCtx& C, SharedSearch& S, const std::vector<int>& chosen) {
    std::vector<int> members;
    members.reserve(chosen.size());
    for (int j : chosen) members.push_back(C.max_all_idx[j]);
    std::sort(members.begin(), members.end());
    S.offer((long long)chosen.size(), members);
}

// Uncovered element lying in the fewest maximal subgroups (smallest id on ties).
int sigma_branch_elem(const SigmaCtx& C, const Bitset& covered) {
    int best = -1, best_cnt = C.M + 1;
    for (int e = 1; e < C.n; ++e) {
        if (covered.test(e)) continue;
        if (C.mask_count[e] < best_cnt) {
            best_cnt = C.mask_count[e];
            best = e;
        }
    }
    return best;
}

struct SigmaScratch {
    std::vector<std::uint64_t> acc;
};

void sigma_dfs(const SigmaCtx& C, SharedSearch& S, SigmaScratch& scratch, const Bitset& covered,
               int covered_cnt, std::vector<int>& chosen) {
    if (covered_cnt == C.n) {
        sigma_offer(C, S, chosen);
        return;
    }
    long long lb = (long long)chosen.size() + sigma_bound(C, covered, covered_cnt, scratch.acc);
    if (S.tick()) {
        S.abandon(lb);
        return;
    }
    if (lb >= S.best()) return;
    int x = sigma_branch_elem(C, covered);
    const std::uint64_t* xm = &C.mask[std::size_t(x) * C.words];
    for (int j : C.by_order) {
        if (!((xm[j >> 6] >> (j & 63)) & 1ULL)) continue;
        Bitset cov2 = covered;
        cov2 |= *C.max_bits[j];
        chosen.push_back(j);
        sigma_dfs(C, S, scratch, cov2, cov2.count(), chosen);
        chosen.pop_back();
        if (S.stopped()) {
            S.abandon(lb);
            return;
        }
    }
}

// Most new elements first; ties prefer the larger subgroup, then the lower id.
void sigma_greedy(const SigmaCtx& C, SharedSearch& S) {
    Bitset covered(C.n);
    covered.set(0);
    int covered_cnt = 1;
    std::vector<int> chosen;
    while (covered_cnt < C.n) {
        int best = -1;
        long long best_new = -1;
        for (int j = 0; j < C.M; ++j) {
            long long nw = C.max_order[j] - C.max_bits[j]->count_and(covered);
            if (nw > best_new ||
                (nw == best_new && best >= 0 &&
                 (C.max_order[j] > C.max_order[best] ||
                  (C.max_order[j] == C.max_order[best] && j < best)))) {
                best_new = nw;
                best = j;
            }
        }
        if (best < 0 || best_new <= 0) throw std::logic_error("sigma: greedy cover stalled");
        covered |= *C.max_bits[best];
        covered_cnt = covered.count();
        chosen.push_back(best);
    }
    sigma_offer(C, S, chosen);
}

struct SigmaTask {
    int j0 = -1, j1 = -1;
    long long lb = 0;
};

SigmaResult run_sigma(const Group& G, const std::vector<Subgroup>& all,
                      const SearchBudget& budget) {
    SigmaCtx C = build_sigma_ctx(G, all);
    SharedSearch S;
    arm(S, budget);
    SigmaScratch scratch;

    sigma_greedy(C, S);

    Bitset root_cov(C.n);
    root_cov.set(0);
    C.root_lb = sigma_bound(C, root_cov, 1, scratch.acc);

    std::vector<int> chosen;
    if (budget.thread_count == 1) {
        sigma_dfs(C, S, scratch, root_cov, 1, chosen);
    } else {
        // Deterministic two-level prefix tasks pulled from a shared queue.
        std::vector<SigmaTask> tasks;
        if (!S.tick()) {
            int x0 = sigma_branch_elem(C, root_cov);
            const std::uint64_t* x0m = &C.mask[std::size_t(x0) * C.words];
            for (int j0 : C.by_order) {
                if (!((x0m[j0 >> 6] >> (j0 & 63)) & 1ULL)) continue;
                Bitset cov1 = root_cov;
                cov1 |= *C.max_bits[j0];
                int cnt1 = cov1.count();
                long long lb1 = 1 + sigma_bound(C, cov1, cnt1, scratch.acc);
                if (S.tick()) {
                    // The whole root subtree is only partially enumerated.
                    S.abandon(C.root_lb);
                    break;
                }
                int x1 = sigma_branch_elem(C, cov1);
                const std::uint64_t* x1m = &C.mask[std::size_t(x1) * C.words];
                for (int j1 : C.by_order)
                    if ((x1m[j1 >> 6] >> (j1 & 63)) & 1ULL) tasks.push_back({j0, j1, lb1});
            }
        }
        std::atomic<int> next{0};
        int nthreads = std::min(budget.thread_count, std::max(1, int(tasks.size())));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                SigmaScratch ts;
                std::vector<int> tchosen;
                for (;;) {
                    int i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= int(tasks.size())) break;
                    const SigmaTask& task = tasks[i];
                    if (S.stopped()) {
                        S.abandon(task.lb);
                        continue;
                    }
                    Bitset cov = Bitset(C.n);
                    cov.set(0);
                    cov |= *C.max_bits[task.j0];
                    cov |= *C.max_bits[task.j1];
                    tchosen.assign({task.j0, task.j1});
                    sigma_dfs(C, S, ts, cov, cov.count(), tchosen);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SigmaResult R;
    R.nodes = S.nodes.load();
    long long bv = S.best();
    long long ab = S.abandoned_min.load();
    if (!S.stopped() || ab >= bv) {
        R.kind = SigmaResult::Kind::Exact;
        R.value = bv;
        R.lower = bv;
        R.upper = bv;
    } else {
        R.kind = SigmaResult::Kind::Bounds;
        R.lower = std::max(std::min(ab, bv), C.root_lb);
        R.upper = bv;
    }
    CoverCertificate cert;
    {
        std::lock_guard<std::mutex> lk(S.best_mtx);
        cert.members = S.best_members;
    }
    R.cert = std::move(cert);
    return R;
}

// ---------------------------------------------------------------------------
// Minimal partition search.
// ---------------------------------------------------------------------------

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

struct RhoCand {
    int all_idx = -1;
    int order = 0;
    Bitset cls_set;               // classes covered (over class ids)
    bool normal_prime_index = false;
};

struct RhoCtx {
    const Group* G = nullptr;
    int n = 0;
    int nclasses = 0;
    std::vector<int> cls_of;              // element -> class (identity: -1)
    std::vector<int> cls_elems;           // nonidentity elements per class
    std::vector<RhoCand> cands;           // sorted by (order desc, all_idx asc)
    std::vector<std::vector<int>> cls_cands;
    long long sqrt_lb = 0;
    long long root_lb = 0;
    bool uncoverable_class = false;       // some class fits in no candidate
};

// Groups nonidentity elements into power classes: any part containing x also
// contains every power of x and every element with the same cyclic subgroup
// chain, so these sets are covered all-or-nothing.
RhoCtx build_rho_ctx(const Group& G, const std::vector<Subgroup>& all, bool with_bounds) {
    RhoCtx C;
    C.G = &G;
    C.n = G.order();
    C.sqrt_lb = 1 + ceil_sqrt(C.n);
    UnionFind uf(C.n);
    for (int x = 1; x < C.n; ++x)
        for (int y = G.mul(x, x); y != 0; y = G.mul(y, x)) uf.unite(x, y);
    std::vector<int> cls_id(C.n, -1);
    C.cls_of.assign(C.n, -1);
    std::vector<Bitset> cls_bits;
    for (int x = 1; x < C.n; ++x) {
        int r = uf.find(x);
        if (cls_id[r] < 0) {
            cls_id[r] = C.nclasses++;
            cls_bits.emplace_back(C.n);
            C.cls_elems.push_back(0);
        }
        int c = cls_id[r];
        C.cls_of[x] = c;
        cls_bits[c].set(x);
        ++C.cls_elems[c];
    }

    std::vector<int> stamp(C.nclasses, -1);
    for (int i = 0; i < int(all.size()); ++i) {
        const Subgroup& Sg = all[i];
        if (Sg.order < 2 || Sg.order >= C.n) continue;
        RhoCand cand;
        cand.all_idx = i;
        cand.order = Sg.order;
        cand.cls_set = Bitset(C.nclasses);
        bool closed = true;
        for (int x = Sg.bits.next_set(0); x >= 0; x = Sg.bits.next_set(x)) {
            int c = C.cls_of[x];
            if (stamp[c] == i) continue;
            stamp[c] = i;
            if (!cls_bits[c].is_subset_of(Sg.bits)) {
                closed = false;
                break;
            }
            cand.cls_set.set(c);
        }
        if (!closed) continue;
        if (with_bounds) {
            long long index = C.n / Sg.order;
            cand.normal_prime_index = is_prime(index) && is_normal(G, Sg);
        }
        C.cands.push_back(std::move(cand));
    }
    std::sort(C.cands.begin(), C.cands.end(), [](const RhoCand& a, const RhoCand& b) {
        if (a.order != b.order) return a.order > b.order;
        return a.all_idx < b.all_idx;
    });
    C.cls_cands.assign(C.nclasses, {});
    for (int k = 0; k < int(C.cands.size()); ++k)
        for (int c = C.cands[k].cls_set.first_set(); c >= 0; c = C.cands[k].cls_set.next_set(c))
            C.cls_cands[c].push_back(k);
    for (int c = 0; c < C.nclasses; ++c)
        if (C.cls_cands[c].empty()) C.uncoverable_class = true;
    long long maxord = C.cands.empty() ? 2 : C.cands.front().order;
    C.root_lb = std::max(C.sqrt_lb, 1 + ceil_div((long long)C.n - 1, maxord - 1));
    return C;
}

struct RhoState {
    Bitset cov;            // covered classes
    std::vector<int> chosen; // candidate ids
    long long elems = 0;   // nonidentity elements covered
    int maxord = 0;
    long long forced = 0;  // exact final size forced by a normal prime-index member
};

bool rho_usable(const RhoCtx& C, const RhoState& st, int k) {
    return !C.cands[k].cls_set.intersects(st.cov);
}

// False when the member forces an impossible total.
bool rho_apply(const RhoCtx& C, RhoState& st, int k) {
    const RhoCand& cand = C.cands[k];
    st.cov |= cand.cls_set;
    st.chosen.push_back(k);
    st.elems += cand.order - 1;
    st.maxord = std::max(st.maxord, cand.order);
    if (cand.normal_prime_index) {
        long long total = 1 + cand.order;
        if (st.forced != 0 && st.forced != total) return false;
        st.forced = total;
    }
    return true;
}

long long rho_bound(const RhoCtx& C, const RhoState& st) {
    long long uncov = (long long)(C.n - 1) - st.elems;
    long long maxusable = 0;
    for (const RhoCand& cand : C.cands) { // order-descending: first usable wins
        if (!cand.cls_set.intersects(st.cov)) {
            maxusable = cand.order;
            break;
        }
    }
    if (uncov > 0 && maxusable == 0) return kInf;
    long long lb = (long long)st.chosen.size();
    if (uncov > 0) lb += ceil_div(uncov, maxusable - 1);
    lb = std::max({lb, (long long)(1 + st.maxord), C.sqrt_lb});
    if (st.forced != 0) {
        if (lb > st.forced) return kInf; // bounds contradict the forced total
        lb = st.forced;
    }
    return lb;
}

void rho_offer(const RhoCtx& C, SharedSearch& S, const RhoState& st) {
    std::vector<int> members;
    members.reserve(st.chosen.size());
    for (int k : st.chosen) members.push_back(C.cands[k].all_idx);
    std::sort(members.begin(), members.end());
    S.offer((long long)st.chosen.size(), members);
}

enum class Settle { Dead, Complete, Branch, Stopped };

// Applies forced members (classes with a single usable candidate) until the
// state completes, dies, or reaches a genuine choice; reports the bound and
// the class to branch on.
Settle rho_settle(const RhoCtx& C, SharedSearch& S, RhoState& st, long long& lb_out,
                  int& branch_cls) {
    for (;;) {
        int covered_classes = st.cov.count();
        if (covered_classes == C.nclasses) {
            lb_out = (long long)st.chosen.size();
            return Settle::Complete;
        }
        int forced_cls = -1, forced_cand = -1;
        int mrv_cls = -1;
        int mrv_cnt = std::numeric_limits<int>::max();
        for (int c = 0; c < C.nclasses; ++c) {
            if (st.cov.test(c)) continue;
            int cnt = 0, last = -1;
            for (int k : C.cls_cands[c]) {
                if (rho_usable(C, st, k)) {
                    ++cnt;
                    if (cnt == 1) last = k;
                    if (cnt >= mrv_cnt && cnt >= 2) break;
                }
            }
            if (cnt == 0) {
                lb_out = rho_bound(C, st);
                return Settle::Dead;
            }
            if (cnt == 1) {
                forced_cls = c;
                forced_cand = last;
                break;
            }
            if (cnt < mrv_cnt) {
                mrv_cnt = cnt;
                mrv_cls = c;
            }
        }
        if (forced_cls >= 0) {
            if (S.tick()) {
                S.abandon(rho_bound(C, st));
                return Settle::Stopped;
            }
            if (!rho_apply(C, st, forced_cand)) {
                lb_out = kInf;
                return Settle::Dead;
            }
            // A forced total at or past the incumbent cannot improve.
            if (st.forced != 0 && st.forced >= S.best()) {
                lb_out = st.forced;
                return Settle::Dead;
            }
            continue;
        }
        lb_out = rho_bound(C, st);
        branch_cls = mrv_cls;
        return Settle::Branch;
    }
}

void rho_dfs(const RhoCtx& C, SharedSearch& S, RhoState st) {
    long long lb = 0;
    int branch_cls = -1;
    if (S.tick()) {
        S.abandon(rho_bound(C, st));
        return;
    }
    Settle r = rho_settle(C, S, st, lb, branch_cls);
    if (r == Settle::Complete) {
        rho_offer(C, S, st);
        return;
    }
    if (r != Settle::Branch) return;
    if (lb >= S.best()) return;
    for (int k : C.cls_cands[branch_cls]) {
        if (!rho_usable(C, st, k)) continue;
        RhoState child = st;
        if (!rho_apply(C, child, k)) continue;
        rho_dfs(C, S, std::move(child));
        if (S.stopped()) {
            S.abandon(lb);
            return;
        }
    }
}

struct RhoTask {
    int k0 = -1, k1 = -1;
    long long lb = 0;
};

RhoResult run_rho(const Group& G, const std::vector<Subgroup>& all, const SearchBudget& budget,
                  const PartitionCertificate* incumbent) {
    RhoCtx C = build_rho_ctx(G, all, true);
    SharedSearch S;
    arm(S, budget);
    const long long sentinel = C.n; // every partition has at most |G| - 1 parts

    RhoResult R;
    if (incumbent != nullptr) {
        if (!verify_partition(G, all, *incumbent))
            throw std::invalid_argument("rho: incumbent certificate does not verify");
        std::vector<int> members = incumbent->members;
        std::sort(members.begin(), members.end());
        S.offer((long long)members.size(), members);
    } else {
        S.best_val.store(sentinel, std::memory_order_relaxed);
    }

    if (C.n == 1 || C.uncoverable_class) {
        // Some power class fits inside no proper subgroup: no partition exists.
        R.kind = incumbent == nullptr ? RhoResult::Kind::None : RhoResult::Kind::Exact;
        if (incumbent != nullptr) {
            R.value = S.best();
            R.lower = R.value;
            R.upper = R.value;
            PartitionCertificate cert;
            cert.members = S.best_members;
            R.cert = std::move(cert);
        }
        R.nodes = S.nodes.load();
        return R;
    }

    RhoState root;
    root.cov = Bitset(C.nclasses);

    if (budget.thread_count == 1) {
        rho_dfs(C, S, root);
    } else {
        std::vector<RhoTask> tasks;
        bool done_inline = false;
        long long lb0 = 0;
        int cls0 = -1;
        if (S.tick()) {
            S.abandon(C.root_lb);
            done_inline = true;
        } else {
            Settle r0 = rho_settle(C, S, root, lb0, cls0);
            if (r0 == Settle::Complete) {
                rho_offer(C, S, root);
                done_inline = true;
            } else if (r0 != Settle::Branch || lb0 >= S.best()) {
                done_inline = true;
            }
        }
        if (!done_inline) {
            for (int k0 : C.cls_cands[cls0]) {
                if (!rho_usable(C, root, k0)) continue;
                RhoState st1 = root;
                if (!rho_apply(C, st1, k0)) continue;
                if (S.tick()) {
                    S.abandon(lb0);
                    break;
                }
                long long lb1 = 0;
                int cls1 = -1;
                Settle r1 = rho_settle(C, S, st1, lb1, cls1);
                if (r1 == Settle::Complete) {
                    rho_offer(C, S, st1);
                    continue;
                }
                if (r1 == Settle::Stopped) {
                    // Remaining root children are only partially enumerated.
                    S.abandon(lb0);
                    break;
                }
                if (r1 != Settle::Branch) continue;
                for (int k1 : C.cls_cands[cls1])
                    if (rho_usable(C, st1, k1)) tasks.push_back({k0, k1, lb1});
            }
        }
        std::atomic<int> next{0};
        int nthreads = std::min(budget.thread_count, std::max(1, int(tasks.size())));
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    int i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= int(tasks.size())) break;
                    const RhoTask& task = tasks[i];
                    if (S.stopped()) {
                        S.abandon(task.lb);
                        continue;
                    }
                    RhoState st;
                    st.cov = Bitset(C.nclasses);
                    long long lb = 0;
                    int cls = -1;
                    if (rho_settle(C, S, st, lb, cls) != Settle::Branch) continue;
                    if (!rho_apply(C, st, task.k0)) continue;
                    if (rho_settle(C, S, st, lb, cls) != Settle::Branch) continue;
                    if (!rho_apply(C, st, task.k1)) continue;
                    rho_dfs(C, S, std::move(st));
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    R.nodes = S.nodes.load();
    long long bv = S.best();
    long long ab = S.abandoned_min.load();
    bool resolved = !S.stopped() || ab >= bv;
    if (resolved && bv >= sentinel) {
        R.kind = RhoResult::Kind::None;
    } else if (resolved) {
        R.kind = RhoResult::Kind::Exact;
        R.value = bv;
        R.lower = bv;
        R.upper = bv;
        PartitionCertificate cert;
        {
            std::lock_guard<std::mutex> lk(S.best_mtx);
            cert.members = S.best_members;
        }
        R.cert = std::move(cert);
    } else {
        R.kind = RhoResult::Kind::Bounds;
        R.lower = std::max(std::min(ab, bv), C.root_lb);
        if (bv < sentinel) {
            R.upper = bv;
            PartitionCertificate cert;
            {
                std::lock_guard<std::mutex> lk(S.best_mtx);
                cert.members = S.best_members;
            }
            R.cert = std::move(cert);
        }
    }
    return R;
}

bool exists_dfs(const RhoCtx& C, RhoState st, long long& nodes, long long cap) {
    for (;;) {
        if (++nodes > cap) throw std::runtime_error("partition_exists: internal node cap hit");
        if (st.cov.count() == C.nclasses) return true;
        int forced_cls = -1, forced_cand = -1;
        int mrv_cls = -1, mrv_cnt = std::numeric_limits<int>::max();
        for (int c = 0; c < C.nclasses; ++c) {
            if (st.cov.test(c)) continue;
            int cnt = 0, last = -1;
            for (int k : C.cls_cands[c]) {
                if (rho_usable(C, st, k)) {
                    ++cnt;
                    if (cnt == 1) last = k;
                    if (cnt >= mrv_cnt && cnt >= 2) break;
                }
            }
            if (cnt == 0) return false;
            if (cnt == 1) {
                forced_cls = c;
                forced_cand = last;
                break;
            }
            if (cnt < mrv_cnt) {
                mrv_cnt = cnt;
                mrv_cls = c;
            }
        }
        if (forced_cls >= 0) {
            rho_apply(C, st, forced_cand);
            continue;
        }
        for (int k : C.cls_cands[mrv_cls]) {
            if (!rho_usable(C, st, k)) continue;
            RhoState child = st;
            rho_apply(C, child, k);
            if (exists_dfs(C, std::move(child), nodes, cap)) return true;
        }
        return false;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Public API.
// ---------------------------------------------------------------------------

int find_subgroup_index(const std::vector<Subgroup>& all, const Bitset& bits) {
    int ord = bits.count();
    int lo = 0, hi = int(all.size());
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        const Subgroup& s = all[mid];
        bool less = s.order < ord ||
                    (s.order == ord && Bitset::lex_compare(s.bits, bits) < 0);
        if (less)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < int(all.size()) && all[lo].order == ord &&
        Bitset::lex_compare(all[lo].bits, bits) == 0)
        return lo;
    return -1;
}

SigmaResult sigma(const Group& G, const SearchBudget& budget) {
    check_budget(budget);
    if (is_cyclic(G)) {
        SigmaResult R;
        R.kind = SigmaResult::Kind::Infinite;
        return R;
    }
    std::vector<Subgroup> all = all_subgroups(G);
    return run_sigma(G, all, budget);
}

SigmaResult sigma(const Group& G, const std::vector<Subgroup>& all, const SearchBudget& budget) {
    check_budget(budget);
    if (is_cyclic(G)) {
        SigmaResult R;
        R.kind = SigmaResult::Kind::Infinite;
        return R;
    }
    return run_sigma(G, all, budget);
}

RhoResult rho(const Group& G, const SearchBudget& budget) {
    check_budget(budget);
    std::vector<Subgroup> all = all_subgroups(G);
    return run_rho(G, all, budget, nullptr);
}

RhoResult rho(const Group& G, const std::vector<Subgroup>& all, const SearchBudget& budget,
              const PartitionCertificate* incumbent) {
    check_budget(budget);
    return run_rho(G, all, budget, incumbent);
}

namespace {

bool verify_members(const Group& G, const std::vector<Subgroup>& all,
                    const std::vector<int>& idxs, bool partition) {
    const int n = G.order();
    for (int i : idxs)
        if (i < 0 || i >= int(all.size()))
            throw std::out_of_range("certificate index out of range");
    std::vector<int> sorted = idxs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    Bitset uni(n);
    for (int i : idxs) {
        const Bitset& bits = all[i].bits;
        int ord = bits.count();
        if (!bits.test(0)) return false;
        if (ord >= n) return false;          // proper
        if (partition && ord < 2) return false; // nontrivial
        if (!is_subgroup(G, bits)) return false;
        uni |= bits;
    }
    if (uni.count() != n) return false;
    if (partition) {
        for (std::size_t a = 0; a < idxs.size(); ++a)
            for (std::size_t b = a + 1; b < idxs.size(); ++b)
                if (all[idxs[a]].bits.count_and(all[idxs[b]].bits) != 1) return false;
    }
    return true;
}

} // namespace

bool verify_cover(const Group& G, const CoverCertificate& cert) {
    std::vector<Subgroup> all = all_subgroups(G);
    return verify_members(G, all, cert.members, false);
}

bool verify_cover(const Group& G, const std::vector<Subgroup>& all, const CoverCertificate& cert) {
    return verify_members(G, all, cert.members, false);
}

bool verify_partition(const Group& G, const PartitionCertificate& cert) {
    std::vector<Subgroup> all = all_subgroups(G);
    return verify_members(G, all, cert.members, true);
}

bool verify_partition(const Group& G, const std::vector<Subgroup>& all,
                      const PartitionCertificate& cert) {
    return verify_members(G, all, cert.members, true);
}

long long rho_lower_bound(const Group& G) { return 1 + ceil_sqrt(G.order()); }

bool partition_exists(const Group& G, const std::vector<Subgroup>& all) {
    if (G.order() == 1) return false;
    RhoCtx C = build_rho_ctx(G, all, false);
    if (C.uncoverable_class) return false;
    RhoState root;
    root.cov = Bitset(C.nclasses);
    long long nodes = 0;
    return exists_dfs(C, std::move(root), nodes, 200'000'000LL);
}

PartitionCertificate as_partition_certificate(const std::vector<Subgroup>& parts,
                                              const std::vector<Subgroup>& all) {
    PartitionCertificate cert;
    cert.members.reserve(parts.size());
    for (const Subgroup& part : parts) {
        int idx = find_subgroup_index(all, part.bits);
        if (idx < 0)
            throw std::invalid_argument("as_partition_certificate: part is not in the subgroup list");
        cert.members.push_back(idx);
    }
    std::sort(cert.members.begin(), cert.members.end());
    if (std::adjacent_find(cert.members.begin(), cert.members.end()) != cert.members.end())
        throw std::invalid_argument("as_partition_certificate: duplicate part");
    return cert;
}

} // namespace particover
