#include "qes/midx.hpp"

#include <algorithm>
#include <functional>

namespace qes {

std::string MIdx::str() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

std::vector<MIdx> monomials_up_to(int d, int max_degree) {
    std::vector<MIdx> out;
    MIdx cur(d);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[pos] = k;
            rec(pos + 1, left - k);
        }
        cur[pos] = 0;
    };
    if (max_degree >= 0) rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qes
