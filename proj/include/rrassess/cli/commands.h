// cli/commands.h

// Copyright 2026 The rrassess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef RRASSESS_CLI_COMMANDS_H_
#define RRASSESS_CLI_COMMANDS_H_

#include <ostream>

#include "rrassess/cli/config.h"

namespace rrassess::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;

/// Loads the corpus and checks every transcript; prints one line per
/// violation. Returns kExitData when any violation is found.
int RunValidate(const RunConfig &config, std::ostream &out);

/// Writes prosody_<preset>_<mode>.csv per preset,
/// prosody_egemaps-analog_utterance.csv (fusion input), lexical.csv and
/// syntactic.csv to config.out.
void RunExtract(const RunConfig &config, std::ostream &log);

/// Reads the extracted CSVs and writes table1..table4.json, tables.txt,
/// confusion_table1..4.csv and fig1_counts.csv to config.out.
void RunEvaluate(const RunConfig &config, std::ostream &log);

/// Prints the rendered tables from the JSON reports in config.out.
void RunReport(const RunConfig &config, std::ostream &out);

/// Prints the pairwise exact agreement per rating criterion.
void RunAgreement(const RunConfig &config, std::ostream &out);

/// Command-line entry point: parses arguments, dispatches, and maps
/// DataError to 1 and usage errors to 2.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

}  // namespace rrassess::cli

#endif  // RRASSESS_CLI_COMMANDS_H_
