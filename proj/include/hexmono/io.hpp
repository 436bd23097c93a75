#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexmono/engine.hpp"

namespace hexmono {

struct Construction;

struct PatchVerdicts {
    bool edge_connected = false;
    bool r1_ok = false;
    long r1_violations = 0;
    int r2_components = 0;
    long r2_edges = 0;
    bool r2_tree = false;
    bool constructible = false;
    friend bool operator==(const PatchVerdicts&, const PatchVerdicts&) = default;
};
PatchVerdicts compute_verdicts(const Patch& p);

using Meta = std::vector<std::pair<std::string, std::string>>;

struct PatchFile {
    Patch patch;
    Meta meta;               // "# key value" lines other than verdicts, in file order
    PatchVerdicts verdicts;  // recomputed on load
    bool stale_verdicts = false;  // the file's verdict lines disagree with the recomputation
};

class PatchFormatError : public std::runtime_error {
public:
    PatchFormatError(int line, const std::string& m)
        : std::runtime_error("line " + std::to_string(line) + ": " + m), line(line) {}
    int line;
};

// "hexmono v1" text: header, "# key value" metadata, then one "q r o" line per tile in sorted order
std::string write_patch(const Patch& p, const Meta& meta = {});
PatchFile read_patch(const std::string& text);
PatchFile load_patch_file(const std::string& path);
void save_patch_file(const std::string& path, const Patch& p, const Meta& meta = {});

Meta construction_meta(const Construction& c);

}  // namespace hexmono
