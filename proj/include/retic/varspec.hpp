#pragma once

#include <cctype>
#include <string>
#include <vector>
#include <stdexcept>

namespace retic {

// Role of an unfolding parameter. Corner (x) and fiber (y) variables are kept
// apart from parameters; the parameter block carries the roles that matter to
// the unfolding tests: one optional time variable t, the base parameters q,
// auxiliary u-parameters from versal constructions, and one optional z.
enum class Role { Time, Q, U, Z };

struct Param {
    std::string name;
    Role role;
    bool operator==(const Param&) const = default;
};

// Variable layout of one germ slot: x1..xr (corner, half-space x >= 0),
// y1..yk (fiber), then the shared parameter block. Variable indices are
// 0..r-1 for x, r..r+k-1 for y, r+k.. for parameters.
struct VarSpec {
    int r = 0;
    int k = 0;
    std::vector<Param> params;

    int nparams() const { return static_cast<int>(params.size()); }
    int nvars() const { return r + k + nparams(); }

    int x_index(int j) const { return j; }
    int y_index(int j) const { return r + j; }
    int param_index(int j) const { return r + k + j; }

    bool is_x(int v) const { return v < r; }
    bool is_y(int v) const { return v >= r && v < r + k; }
    bool is_param(int v) const { return v >= r + k; }

    // -1 when the spec has no such parameter.
    int find_param(const std::string& name) const {
        for (int j = 0; j < nparams(); ++j)
            if (params[j].name == name) return param_index(j);
        return -1;
    }

    int find_role(Role role) const {
        for (int j = 0; j < nparams(); ++j)
            if (params[j].role == role) return param_index(j);
        return -1;
    }

    std::vector<int> role_indices(Role role) const {
        std::vector<int> out;
        for (int j = 0; j < nparams(); ++j)
            if (params[j].role == role) out.push_back(param_index(j));
        return out;
    }

    std::string var_name(int v) const {
        if (is_x(v)) return r == 1 ? "x" : "x" + std::to_string(v + 1);
        if (is_y(v)) return k == 1 ? "y" : "y" + std::to_string(v - r + 1);
        return params[v - r - k].name;
    }

    // Accepts canonical names and the single-member aliases x, y, q, u.
    // Indexed q-names resolve positionally among the Q-role parameters, so
    // "q1" works whether the parameter was stored as "q" or "q1".
    int find_var(const std::string& name) const {
        if (name == "x") return r == 1 ? 0 : -1;
        if (name == "y") return k == 1 ? r : -1;
        if (name.size() >= 2 && name[0] == 'x' && std::isdigit((unsigned char)name[1])) {
            int j = std::stoi(name.substr(1));
            return (j >= 1 && j <= r) ? j - 1 : -1;
        }
        if (name.size() >= 2 && name[0] == 'y' && std::isdigit((unsigned char)name[1])) {
            int j = std::stoi(name.substr(1));
            return (j >= 1 && j <= k) ? r + j - 1 : -1;
        }
        int direct = find_param(name);
        if (direct >= 0) return direct;
        if (name == "q") {
            auto qs = role_indices(Role::Q);
            return qs.size() == 1 ? qs[0] : -1;
        }
        if (name == "u") {
            auto us = role_indices(Role::U);
            return us.size() == 1 ? us[0] : -1;
        }
        if (name.size() >= 2 && name[0] == 'q' && std::isdigit((unsigned char)name[1])) {
            auto qs = role_indices(Role::Q);
            int j = std::stoi(name.substr(1));
            return (j >= 1 && j <= (int)qs.size()) ? qs[j - 1] : -1;
        }
        return -1;
    }

    bool operator==(const VarSpec&) const = default;
};

// Germ space with no parameters.
inline VarSpec germ_spec(int r, int k) {
    VarSpec s;
    s.r = r;
    s.k = k;
    return s;
}

// Parameter block t, q1..qn, z in that order. Either end is optional.
inline std::vector<Param> family_params(int n, bool with_t, bool with_z) {
    std::vector<Param> ps;
    if (with_t) ps.push_back({"t", Role::Time});
    for (int j = 1; j <= n; ++j)
        ps.push_back({n == 1 ? std::string("q") : "q" + std::to_string(j), Role::Q});
    if (with_z) ps.push_back({"z", Role::Z});
    return ps;
}

inline VarSpec family_spec(int r, int k, int n, bool with_t, bool with_z) {
    VarSpec s = germ_spec(r, k);
    s.params = family_params(n, with_t, with_z);
    return s;
}

} // namespace retic
