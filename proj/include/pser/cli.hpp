#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pser/series.hpp"

namespace pser::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_parse = 2;      // bad arguments or malformed literals
inline constexpr int exit_domain = 3;     // zero constant term, wrong order, ...
inline constexpr int exit_precision = 4;  // depth/precision too small

enum class Preset { geometric, pascal_g, one, arithgeo, curious_f, curious_g };

// A series argument: a JSON literal (polynomial) or one of the named presets
// geometric = 1/(1-x), pascal_g = 1-x, one = 1, arithgeo = curious_f = 1/(1-x)^2,
// curious_g = 2x-1.
class SeriesSpec {
public:
    // Text starting with '[' is a literal, anything else a preset name.
    // Throws parse_error.
    static SeriesSpec parse(std::string_view text);

    // The series known through degree `precision`.
    [[nodiscard]] Series resolve(std::size_t precision) const;

private:
    std::variant<std::vector<Rational>, Preset> value_;
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pser::cli
