#pragma once

#include <string>

#include "qh/h_realization.hpp"
#include "qh/matrix.hpp"

namespace qh {

/// Aligned grid of canonical scalar strings, one matrix row per line.
std::string text_grid(const ExactMatrix& M);
std::string text_grid(const LimitMatrix& M);

/// Human-readable contraction report: finiteness, divergence table,
/// cancellation-order summary.
std::string report_text(const ContractionReport& r);

/// Named relation checks, one PASS/FAIL line each.
std::string relation_report_text(const RelationReport& r);

/// Structured emission:
/// {command, algebra, rep, L, matrix: {rows, cols, entries: [string]},
///  report: {source, finite, deformationFree, cancellation, divergences}}.
/// matrix/report may each be null and are then omitted. Entries are
/// canonical scalar strings in row-major order.
std::string emission_json(const std::string& command, const std::string& algebra,
                          const std::string& rep, int L, const ExactMatrix* matrix,
                          const ContractionReport* report);

/// Inverse of the matrix part of emission_json: accepts either a full
/// emission object or a bare {rows, cols, entries} object.
ExactMatrix matrix_from_json(const std::string& text);

}  // namespace qh
