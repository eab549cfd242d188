// Deterministic generator for IRA LDPC address tables at n = 64800 in the
// repo's table format. Column-degree profiles follow the usual long-frame
// choices per rate. Addresses are balanced so that every residue class mod q
// receives the same number of table entries, which makes all checks the same
// degree (sharp waterfall), and residues are distinct inside each group, which
// prevents shared checks between columns of the same group.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "pasim/rng.hpp"

namespace {

struct Profile {
    const char* rate;
    int k;
    int high_groups;  // leading groups with the high column degree
    int high_degree;
    int low_degree;
};

// n - k parity bits, 360-bit groups, q = (n - k) / 360
const Profile kProfiles[] = {
    {"2/3", 43200, 12, 13, 3},
    {"3/4", 48600, 15, 12, 3},
    {"5/6", 54000, 15, 13, 3},
    {"9/10", 58320, 18, 4, 3},
};

bool deal_residues(pasim::Rng& rng, const std::vector<int>& degrees, int q,
                   int per_class, std::vector<std::vector<int>>* out) {
    std::vector<int> slots;
    for (int r = 0; r < q; ++r) slots.insert(slots.end(), per_class, r);
    for (std::size_t i = slots.size(); i > 1; --i)
        std::swap(slots[i - 1], slots[rng.next_u64() % i]);

    std::vector<char> taken(slots.size(), 0);
    out->assign(degrees.size(), {});
    // high-degree groups first: they need the most distinct residues
    std::vector<int> order(degrees.size());
    for (std::size_t g = 0; g < degrees.size(); ++g) order[g] = static_cast<int>(g);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degrees[a] > degrees[b]; });
    for (int g : order) {
        std::vector<char> used(q, 0);
        auto& mine = (*out)[g];
        for (std::size_t s = 0; s < slots.size() && static_cast<int>(mine.size()) < degrees[g]; ++s) {
            if (taken[s] || used[slots[s]]) continue;
            taken[s] = 1;
            used[slots[s]] = 1;
            mine.push_back(slots[s]);
        }
        if (static_cast<int>(mine.size()) != degrees[g]) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string rate, out_path;
    std::uint64_t seed = 20260808;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--rate") && i + 1 < argc)
            rate = argv[++i];
        else if (!std::strcmp(argv[i], "--out") && i + 1 < argc)
            out_path = argv[++i];
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
            seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::fprintf(stderr, "usage: %s --rate {2/3|3/4|5/6|9/10} --out FILE [--seed N]\n",
                         argv[0]);
            return 2;
        }
    }
    const Profile* profile = nullptr;
    for (const auto& p : kProfiles) {
        if (rate == p.rate) profile = &p;
    }
    if (!profile || out_path.empty()) {
        std::fprintf(stderr, "usage: %s --rate {2/3|3/4|5/6|9/10} --out FILE [--seed N]\n",
                     argv[0]);
        return 2;
    }

    const int n = 64800;
    const int k = profile->k;
    const int nk = n - k;
    const int groups = k / 360;
    const int q = nk / 360;

    std::vector<int> degrees(groups);
    int total = 0;
    for (int g = 0; g < groups; ++g) {
        degrees[g] = g < profile->high_groups ? profile->high_degree : profile->low_degree;
        total += degrees[g];
    }
    if (total % q != 0) {
        std::fprintf(stderr, "profile is not check-regular: %d addresses over q=%d\n", total, q);
        return 1;
    }

    std::vector<std::vector<int>> residues;
    pasim::Rng rng(seed);
    for (int attempt = 0;; ++attempt) {
        if (deal_residues(rng, degrees, q, total / q, &residues)) break;
        if (attempt > 200) {
            std::fprintf(stderr, "residue dealing did not converge\n");
            return 1;
        }
    }

    std::ofstream out(out_path);
    out << n << " " << k << "\n";
    for (int g = 0; g < groups; ++g) {
        // adjacent addresses inside a group would share the chain bit between
        // their checks in every expanded column (a 4-cycle times 360)
        std::vector<int> chosen;
        for (std::size_t j = 0; j < residues[g].size(); ++j) {
            int addr;
            bool clash;
            do {
                int offset = static_cast<int>(rng.next_u64() % 360);
                addr = residues[g][j] + q * offset;
                clash = false;
                for (int prev : chosen) clash = clash || std::abs(addr - prev) <= 1;
            } while (clash);
            chosen.push_back(addr);
            out << addr << (j + 1 < residues[g].size() ? " " : "\n");
        }
    }
    std::fprintf(stderr, "wrote %s: n=%d k=%d groups=%d q=%d check_info_degree=%d\n",
                 out_path.c_str(), n, k, groups, q, total / q);
    return 0;
}
