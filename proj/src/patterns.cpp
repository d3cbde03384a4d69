#include "bmt/patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bmt {

using boost::multiprecision::cpp_int;

cpp_int beta(int l) {
    if (l < 1) throw std::invalid_argument("beta: order must be at least 1");
    if (l > 62) throw std::invalid_argument("beta: exponent 2^l exceeds the representable range");
    return boost::multiprecision::pow(cpp_int(2 * l), static_cast<unsigned>(1ull << l));
}

namespace {

int pattern_entry(PatternKind kind, int i, int j) {
    switch (kind) {
        case PatternKind::Identity: return i == j ? 1 : 0;
        case PatternKind::ComplementIdentity: return i == j ? 0 : 1;
        default: return j <= i ? 1 : 0;  // lower triangular, ones on the diagonal
    }
}

// Try to read the pattern off the submatrix rows x cols (both ascending);
// fills the permutations on success.
bool match_kind(const GF2Matrix& a, PatternKind kind, const std::vector<int>& rows,
                const std::vector<int>& cols, std::vector<int>& row_perm,
                std::vector<int>& col_perm) {
    int l = static_cast<int>(rows.size());
    row_perm.assign(l, 0);
    col_perm.assign(l, 0);
    if (kind == PatternKind::Identity || kind == PatternKind::ComplementIdentity) {
        // Permutation structure: every row carries exactly one marked entry
        // (a one, or a zero for the complement) and the positions differ.
        int mark = kind == PatternKind::Identity ? 1 : 0;
        std::vector<bool> used(l, false);
        for (int i = 0; i < l; ++i) {
            int pos = -1;
            for (int j = 0; j < l; ++j) {
                if (a.get(rows[i], cols[j]) == mark) {
                    if (pos >= 0) return false;
                    pos = j;
                }
            }
            if (pos < 0 || used[pos]) return false;
            used[pos] = true;
            row_perm[i] = i;
            col_perm[i] = pos;
        }
        return true;
    }
    // Lower triangular: row weights must be exactly 1..l and the supports must
    // form a chain; the column order is then the order of first appearance.
    std::vector<int> by_weight(l, -1);
    for (int i = 0; i < l; ++i) {
        int w = 0;
        for (int j = 0; j < l; ++j) w += a.get(rows[i], cols[j]);
        if (w < 1 || w > l || by_weight[w - 1] >= 0) return false;
        by_weight[w - 1] = i;
    }
    std::vector<bool> seen(l, false);
    for (int level = 0; level < l; ++level) {
        int i = by_weight[level];
        int fresh = -1;
        for (int j = 0; j < l; ++j) {
            if (!a.get(rows[i], cols[j])) continue;
            if (level > 0 && a.get(rows[by_weight[level - 1]], cols[j])) continue;
            if (fresh >= 0) return false;  // support not nested
            fresh = j;
        }
        if (level > 0) {
            // Nesting: everything from the previous level must persist.
            for (int j = 0; j < l; ++j)
                if (a.get(rows[by_weight[level - 1]], cols[j]) && !a.get(rows[i], cols[j]))
                    return false;
        }
        if (fresh < 0 || seen[fresh]) return false;
        seen[fresh] = true;
        row_perm[level] = by_weight[level];
        col_perm[level] = fresh;
    }
    return true;
}

// Visit k-subsets of [0, n) in lexicographic order until the callback says
// stop (returns true).
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    if (k > n) return false;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        if (f(c)) return true;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

bool hit_matches(const GF2Matrix& a, const PatternHit& hit) {
    int l = hit.order;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (a.get(hit.row_indices[hit.row_perm[i]], hit.col_indices[hit.col_perm[j]]) !=
                pattern_entry(hit.kind, i, j))
                return false;
    return true;
}

std::optional<PatternHit> find_unavoidable(const GF2Matrix& a, int l) {
    if (l < 1) throw std::invalid_argument("find_unavoidable: order must be at least 1");
    {
        std::vector<std::vector<std::uint8_t>> rows(a.rows());
        for (int i = 0; i < a.rows(); ++i) {
            rows[i].resize(a.cols());
            for (int j = 0; j < a.cols(); ++j)
                rows[i][j] = static_cast<std::uint8_t>(a.get(i, j));
        }
        std::sort(rows.begin(), rows.end());
        if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
            throw std::invalid_argument("find_unavoidable: matrix is not simple");
    }
    if (l > a.rows() || l > a.cols()) return std::nullopt;

    for (PatternKind kind : {PatternKind::Identity, PatternKind::ComplementIdentity,
                             PatternKind::LowerTriangular}) {
        std::optional<PatternHit> found;
        for_each_combination(a.rows(), l, [&](const std::vector<int>& rows) {
            return for_each_combination(a.cols(), l, [&](const std::vector<int>& cols) {
                std::vector<int> rp, cp;
                if (!match_kind(a, kind, rows, cols, rp, cp)) return false;
                found = PatternHit{kind, l, rows, cols, std::move(rp), std::move(cp)};
                return true;
            });
        });
        if (found) {
            if (!hit_matches(a, *found))
                throw VerificationError("find_unavoidable: located hit failed re-check");
            return found;
        }
    }
    return std::nullopt;
}

ChainResult chain_or_antichain(int n, const std::vector<std::vector<bool>>& less) {
    if (n < 0 || static_cast<int>(less.size()) != n)
        throw std::invalid_argument("chain_or_antichain: relation size mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(less[i].size()) != n)
            throw std::invalid_argument("chain_or_antichain: relation size mismatch");
        if (less[i][i])
            throw std::invalid_argument("chain_or_antichain: relation is not irreflexive");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (less[i][j])
                for (int k = 0; k < n; ++k)
                    if (less[j][k] && !less[i][k])
                        throw std::invalid_argument("chain_or_antichain: relation not transitive");
    if (n == 0) return ChainResult{ChainKind::Antichain, {}};

    // Height of each item: one plus the tallest predecessor chain.
    std::vector<int> h(n, 0);
    std::function<int(int)> height = [&](int i) {
        if (h[i]) return h[i];
        int best = 0;
        for (int j = 0; j < n; ++j)
            if (less[j][i]) best = std::max(best, height(j));
        return h[i] = best + 1;
    };
    int tallest = 0;
    for (int i = 0; i < n; ++i) tallest = std::max(tallest, height(i));

    int target = 0;
    while (target * target < n) ++target;
    if (tallest >= target) {
        int cur = -1;
        for (int i = 0; i < n; ++i)
            if (h[i] == tallest) {
                cur = i;
                break;
            }
        std::vector<int> chain{cur};
        while (h[cur] > 1) {
            for (int j = 0; j < n; ++j) {
                if (less[j][cur] && h[j] == h[cur] - 1) {
                    cur = j;
                    break;
                }
            }
            chain.push_back(cur);
        }
        std::reverse(chain.begin(), chain.end());
        return ChainResult{ChainKind::Chain, std::move(chain)};
    }
    // All chains are short, so some level of the height function is wide:
    // ceil(n / tallest) >= target because (target - 1)^2 < n.
    std::vector<int> count(tallest + 1, 0);
    for (int i = 0; i < n; ++i) ++count[h[i]];
    int pick = 1;
    for (int v = 1; v <= tallest; ++v)
        if (count[v] > count[pick]) pick = v;
    std::vector<int> anti;
    for (int i = 0; i < n; ++i)
        if (h[i] == pick) anti.push_back(i);
    if (static_cast<int>(anti.size()) < target)
        throw VerificationError("chain_or_antichain: level set under the guaranteed size");
    return ChainResult{ChainKind::Antichain, std::move(anti)};
}

BalancedSeq balance_extend(const std::vector<int>& s) {
    int l = static_cast<int>(s.size());
    if (l < 2) throw std::invalid_argument("balance_extend: need at least two blocks");
    int total = 0;
    for (int v : s) {
        if (v < 1) throw std::invalid_argument("balance_extend: block sizes are positive");
        total += v;
    }
    if (total % 2 != 0) throw std::invalid_argument("balance_extend: total must be even");

    BalancedSeq out;
    out.s = s;
    out.t = s;
    out.mu.assign(l + 1, 0);
    for (int i = 1; i < l; ++i) {
        out.mu[i] = out.t[i - 1] - out.mu[i - 1];
        while (out.mu[i] < 0) {
            out.t[i - 1] += 2;
            out.mu[i] += 2;
        }
    }
    while (out.mu[l - 1] < s[l - 1]) {
        out.t[l - 2] += 2;
        out.mu[l - 1] += 2;
    }
    out.t[l - 1] = out.mu[l - 1];
    out.mu[l] = 0;

    for (int i = 0; i < l; ++i) {
        if (out.t[i] < s[i] || (out.t[i] - s[i]) % 2 != 0)
            throw VerificationError("balance_extend: block size or parity broken");
        if (out.mu[i] + out.mu[i + 1] != out.t[i] || out.mu[i] < 0)
            throw VerificationError("balance_extend: mu recurrence broken");
    }
    return out;
}

UInterleave interleave_u_sets(const BalancedSeq& seq, int q) {
    int l = static_cast<int>(seq.t.size());
    if (l < 2 || static_cast<int>(seq.mu.size()) != l + 1)
        throw std::invalid_argument("interleave_u_sets: malformed sequence");
    int need = 0;
    for (int v : seq.t) need += v;
    for (int j = 1; j < l; ++j) need += 2 * seq.mu[j];
    if (q < need)
        throw std::invalid_argument("interleave_u_sets: q smaller than the total allocation " +
                                    std::to_string(need));

    UInterleave out;
    out.odd_branch = l % 2 == 1;
    out.pieces.assign(4, {});
    out.pieces[0].resize((l + 1) / 2);
    out.pieces[1].resize(l);
    out.pieces[2].resize(l);
    out.pieces[3].resize(l / 2);

    int next = 0;
    auto take = [&next](int count) {
        ElementSet run(count);
        std::iota(run.begin(), run.end(), next);
        next += count;
        return run;
    };
    for (int j = 1; j <= l; ++j) {
        if (j % 2 == 1) {
            out.pieces[0][(j - 1) / 2] = take(seq.t[j - 1]);
            out.pieces[1][j - 1] = take(seq.mu[j]);
            out.pieces[2][j - 1] = take(seq.mu[j]);
            if (j + 1 <= l) out.pieces[3][(j - 1) / 2] = take(seq.t[j]);
        } else {
            out.pieces[2][j - 1] = take(seq.mu[j]);
            out.pieces[1][j - 1] = take(seq.mu[j]);
        }
    }
    for (int i = 0; i < 4; ++i)
        for (const ElementSet& piece : out.pieces[i]) out.u[i] = set_union(out.u[i], piece);

    // Ordering families; empty blocks compare vacuously.
    auto before = [](const ElementSet& a, const ElementSet& b) {
        return a.empty() || b.empty() || a.back() < b.front();
    };
    auto check = [](bool ok, const char* msg) {
        if (!ok) throw VerificationError(std::string("interleave_u_sets: ") + msg);
    };
    for (int j = 0; j < l / 2; ++j) {
        check(before(out.pieces[0][j], out.pieces[3][j]), "U1/U4 interleaving broken");
        if (j + 1 < (l + 1) / 2)
            check(before(out.pieces[3][j], out.pieces[0][j + 1]), "U4/U1 interleaving broken");
    }
    for (int j = 1; j <= l; j += 2) {
        check(before(out.pieces[0][(j - 1) / 2], out.pieces[1][j - 1]), "odd family broken");
        check(before(out.pieces[1][j - 1], out.pieces[2][j - 1]), "odd family broken");
        if (j + 1 <= l)
            check(before(out.pieces[2][j - 1], out.pieces[3][(j - 1) / 2]), "odd family broken");
    }
    for (int j = 2; j <= l; j += 2) {
        check(before(out.pieces[3][j / 2 - 1], out.pieces[2][j - 1]), "even family broken");
        check(before(out.pieces[2][j - 1], out.pieces[1][j - 1]), "even family broken");
        if (j / 2 < (l + 1) / 2)
            check(before(out.pieces[1][j - 1], out.pieces[0][j / 2]), "even family broken");
    }
    int total_t = 0;
    for (int v : seq.t) total_t += v;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            check(is_disjoint(out.u[i], out.u[j]), "sets overlap");
            check(static_cast<int>(set_union(out.u[i], out.u[j]).size()) == total_t,
                  "pair union size is not the block total");
        }
    check(next == need && next <= q, "allocation exceeded q");
    return out;
}

}  // namespace bmt
