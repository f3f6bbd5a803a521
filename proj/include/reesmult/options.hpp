#pragma once

namespace reesmult {

// Knobs shared by the fitting machinery and the graded oracle.  Defaults
// match the CLI defaults; every value participates in the computation the
// same way regardless of worker count, so results are reproducible.
struct ComputeOptions {
    // First sample offset for polynomial fits; doubled on validation
    // failure until offset_cap, then the fit gives up.
    int offset = 2;
    // Number of extra total-degree shells checked after each fit.
    int validation_shells = 2;
    int offset_cap = 64;
    // Extra margin added to the support radius when summing graded pieces.
    int box_margin = 2;
    // Hard limit for the box-doubling loop.
    int box_cap = 4096;
    // 1 = serial reference path; n > 1 = OpenMP with n threads;
    // 0 = all available threads.
    int workers = 1;
};

}  // namespace reesmult
