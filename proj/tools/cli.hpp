#pragma once

// The betti-cone command line: configuration, subcommands and exit codes.

#include "betticone/cone.hpp"
#include "betticone/field.hpp"
#include "betticone/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace betticone::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kCapacity = 3,
    kVerification = 4,
    kInternal = 5,
};

enum class Command { betti, cone_dim, verify, hk };
enum class OutputFormat { table, csv, structured_text };

struct RunConfig {
    Command command = Command::betti;

    // Graph source; exactly one for betti and hk.
    std::optional<std::string> graph_text;  // edge_list with ';' as line break
    std::optional<std::string> graph6;
    std::optional<std::string> file;

    std::optional<int> n;
    std::optional<int> h;
    ConeMethod method = ConeMethod::formula;
    FieldSpec field = FieldSpec::rationals();
    bool dedupe = false;
    bool early_stop = false;
    unsigned workers = 1;
    int max_n = 6;
    std::optional<int> max_j;
    OutputFormat out = OutputFormat::table;
    std::optional<std::string> cache_dir;
};

/// Throws std::invalid_argument when the configuration is inconsistent.
void validate(const RunConfig& config);

/// BETTI_CONE_CACHE if set, else config.cache_dir.
std::optional<std::string> effective_cache_dir(const RunConfig& config);

/// Reads the graph named by the configuration. A file whose first
/// non-blank character is a digit is read as edge_list, otherwise graph6.
Graph load_graph(const RunConfig& config);

void cmd_betti(const RunConfig& config, std::ostream& out);
void cmd_cone_dim(const RunConfig& config, std::ostream& out);
/// Returns true iff every check passed.
bool cmd_verify(const RunConfig& config, std::ostream& out);
void cmd_hk(const RunConfig& config, std::ostream& out);

/// Validates, dispatches and maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betticone::cli
