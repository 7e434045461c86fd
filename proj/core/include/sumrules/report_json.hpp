#pragma once

#include <string>
#include <vector>

#include "sumrules/frames.hpp"
#include "sumrules/riesz.hpp"
#include "sumrules/sumrule.hpp"
#include "sumrules/torus.hpp"

// Single-line JSON emitters for every report type, suitable for JSONL
// streaming. Rationals are serialized as "p/q" strings so nothing is lost;
// multiplicities and gap indices become JSON numbers when they fit in 64 bits
// and decimal strings otherwise.

namespace sumrules {

std::string to_json(const CheckReport& report);
std::string to_json(const FrameReport& report);
std::string to_json(const RieszReport& report);

// Scan artifact. An empty timestamp omits the generated_at field, which is
// how byte-identical golden outputs are produced.
std::string scan_to_json(const std::vector<ScanRecord>& records, const Rational& nu_max,
                         const Integer& n_max, const std::string& timestamp);

// One row per (moduli point, gap index): a,b_sq,in_tau,N,holds.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

// Two float columns (a, b_sq), one row per point with at least one violation.
std::string scan_to_plot(const std::vector<ScanRecord>& records);

}  // namespace sumrules
