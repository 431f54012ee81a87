// Run outcome classification shared by the CLI and its tests.
#pragma once

namespace rangehit {

enum class RunOutcome {
    Success,         // exit 0
    InputError,      // exit 1: bad file, bad flags, bad parameters
    BudgetExhausted, // exit 2: a solver gave up before proving optimality
    Finding,         // exit 3: an outcome that contradicts a proven statement
};

constexpr int exit_code(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::Success: return 0;
        case RunOutcome::InputError: return 1;
        case RunOutcome::BudgetExhausted: return 2;
        case RunOutcome::Finding: return 3;
    }
    return 1;
}

}  // namespace rangehit
