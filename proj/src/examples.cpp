#include "isoasym/config.hpp"

#include "isoasym/errors.hpp"

namespace isoasym {

namespace {

// Canonical builtin configurations. The expression strings are the contract:
// tests compare them byte-for-byte, so edits here are breaking changes.

const std::string kEx1 = R"json({
  "curve": {
    "components": ["(1/2)*cos(s)", "(1/2)*sin(s)", "(1/2)*s", "(sqrt(2)/2)*s"],
    "s_interval": [0, "2*pi"]
  },
  "marching_scale": {
    "u": "(t-1/2)*(q-0)",
    "v": "t-1/2",
    "w": "0",
    "x": "q-0",
    "t0": 0.5,
    "q0": 0.0,
    "t_box": [0, 1],
    "q_box": [0, 1]
  },
  "grid": { "n_s": 257, "n_t": 25, "n_q": 25 },
  "tolerances": { "tol_unit": 1e-8, "tol": 1e-8, "tol_nondeg": 1e-10 },
  "slice": { "fix": "q", "value": 0.0, "project_axis": 4 }
}
)json";

const std::string kEx2a = R"json({
  "curve": {
    "components": ["(1/2)*sin(s)", "(1/2)*cos(s)", "0", "(sqrt(3)/2)*s"],
    "s_interval": [0, 3]
  },
  "marching_scale": {
    "u": "t-1/2",
    "v": "(s+t+1)*(q-0)",
    "w": "0",
    "x": "(s+1)*(t-1/2)",
    "t0": 0.5,
    "q0": 0.0,
    "t_box": [0, 1],
    "q_box": [0, 1]
  },
  "grid": { "n_s": 257, "n_t": 25, "n_q": 25 },
  "tolerances": { "tol_unit": 1e-8, "tol": 1e-8, "tol_nondeg": 1e-10 },
  "slice": { "fix": "q", "value": 0.0, "project_axis": 4 }
}
)json";

// The curve's lower s bound sits at pi/64 rather than 0: the nondegeneracy
// determinant behaves like s^2/4 here, so a grid touching s=0 fails (that
// variant is exercised in the tests).
const std::string kEx2b = R"json({
  "curve": {
    "components": ["(1/2)*sin(s)", "(1/2)*cos(s)", "0", "(sqrt(3)/2)*s"],
    "s_interval": ["pi/64", "pi/2"]
  },
  "marching_scale": {
    "u": "0",
    "v": "sin(s*(q-1/2))",
    "w": "0",
    "x": "s*q^2*(t-1)",
    "t0": 1.0,
    "q0": 0.5,
    "t_box": [0, 1],
    "q_box": [0, 1]
  },
  "grid": { "n_s": 257, "n_t": 25, "n_q": 25 },
  "tolerances": { "tol_unit": 1e-8, "tol": 1e-8, "tol_nondeg": 1e-10 },
  "slice": { "fix": "t", "value": 1.0, "project_axis": 3 }
}
)json";

} // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"ex1", "ex2a", "ex2b"};
    return names;
}

const std::string& example_config(const std::string& name) {
    if (name == "ex1")
        return kEx1;
    if (name == "ex2a")
        return kEx2a;
    if (name == "ex2b")
        return kEx2b;
    throw ConfigError("name", "unknown example \"" + name +
                                  "\" (expected ex1, ex2a or ex2b)");
}

} // namespace isoasym
