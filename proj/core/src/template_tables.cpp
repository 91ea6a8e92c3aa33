#include "thin3d/template_tables.hpp"

namespace thin3d::detail {

// The 38 base deleting templates, one block per template.
//
// Layout per block: three 3x3 planes listed top to bottom (z = +1, 0, -1
// relative to the candidate point p at the center), each plane three rows
// north to south, each row three columns west to east. x grows east,
// y grows north, z grows up.
//
// Cell alphabet:
//   '0'  background required
//   '1'  object required (the center cell is p itself)
//   '.'  don't care
//   '?'  don't care, but at least one '?' cell must be an object point
//   'p'  the p1 cell: don't care here, fixed by the corrected variants
//   'q'  the p2 cell: don't care here, fixed by the corrected variants
//
// docs/templates.md renders the same data with the derived variants.

const TemplateRecord kBaseTemplates[38] = {
    // a1: background plane e, object support w
    {"a1", 'A',
     "..0" "000" "..0"
     "000" "110" "000"
     "..0" "000" "..0"},

    // a2: background plane w, object support e
    {"a2", 'A',
     "0.." "000" "0.."
     "000" "011" "000"
     "0.." "000" "0.."},

    // a3: background plane n, object support s
    {"a3", 'A',
     "000" ".0." ".0."
     "000" "010" "010"
     "000" ".0." ".0."},

    // a4: background plane s, object support n
    {"a4", 'A',
     ".0." ".0." "000"
     "010" "010" "000"
     ".0." ".0." "000"},

    // a5: background plane u, object support d
    {"a5", 'A',
     "000" "000" "000"
     ".0." "010" ".0."
     ".0." "010" ".0."},

    // a6: background plane d, object support u
    {"a6", 'A',
     ".0." "010" ".0."
     ".0." "010" ".0."
     "000" "000" "000"},

    // b1: background planes toward nu, object support sd
    {"b1", 'B',
     "000" "000" "000"
     "000" "010" ".0."
     "000" ".0." "010"},

    // b2: background planes toward nd, object support su
    {"b2", 'B',
     "000" ".0." "010"
     "000" "010" ".0."
     "000" "000" "000"},

    // b3: background planes toward su, object support nd
    {"b3", 'B',
     "000" "000" "000"
     ".0." "010" "000"
     "010" ".0." "000"},

    // b4: background planes toward sd, object support nu
    {"b4", 'B',
     "010" ".0." "000"
     ".0." "010" "000"
     "000" "000" "000"},

    // b5: background planes toward eu, object support wd
    {"b5", 'B',
     "000" "000" "000"
     ".00" "010" ".00"
     "0.0" "100" "0.0"},

    // b6: background planes toward ed, object support wu
    {"b6", 'B',
     "0.0" "100" "0.0"
     ".00" "010" ".00"
     "000" "000" "000"},

    // b7: background planes toward wu, object support ed
    {"b7", 'B',
     "000" "000" "000"
     "00." "010" "00."
     "0.0" "001" "0.0"},

    // b8: background planes toward wd, object support eu
    {"b8", 'B',
     "0.0" "001" "0.0"
     "00." "010" "00."
     "000" "000" "000"},

    // b9: background planes toward ne, object support sw
    {"b9", 'B',
     "000" ".00" "0.0"
     "000" "010" "100"
     "000" ".00" "0.0"},

    // b10: background planes toward nw, object support se
    {"b10", 'B',
     "000" "00." "0.0"
     "000" "010" "001"
     "000" "00." "0.0"},

    // b11: background planes toward se, object support nw
    {"b11", 'B',
     "0.0" ".00" "000"
     "100" "010" "000"
     "0.0" ".00" "000"},

    // b12: background planes toward sw, object support ne
    {"b12", 'B',
     "0.0" "00." "000"
     "001" "010" "000"
     "0.0" "00." "000"},

    // c1: object support corner neu, background octant swd
    {"c1", 'C',
     "0.1" "00." "000"
     "00." "010" "000"
     "000" "000" "000"},

    // c2: object support corner nwu, background octant sed
    {"c2", 'C',
     "1.0" ".00" "000"
     ".00" "010" "000"
     "000" "000" "000"},

    // c3: object support corner seu, background octant nwd
    {"c3", 'C',
     "000" "00." "0.1"
     "000" "010" "00."
     "000" "000" "000"},

    // c4: object support corner swu, background octant ned
    {"c4", 'C',
     "000" ".00" "1.0"
     "000" "010" ".00"
     "000" "000" "000"},

    // c5: object support corner ned, background octant swu
    {"c5", 'C',
     "000" "000" "000"
     "00." "010" "000"
     "0.1" "00." "000"},

    // c6: object support corner nwd, background octant seu
    {"c6", 'C',
     "000" "000" "000"
     ".00" "010" "000"
     "1.0" ".00" "000"},

    // c7: object support corner sed, background octant nwu
    {"c7", 'C',
     "000" "000" "000"
     "000" "010" "00."
     "000" "00." "0.1"},

    // c8: object support corner swd, background octant neu
    {"c8", 'C',
     "000" "000" "000"
     "000" "010" ".00"
     "000" ".00" "1.0"},

    // d1: object edge-diagonal nu, open side e, p2 toward w
    {"d1", 'D',
     "?1." "?0." "?00"
     "?0." "q1p" "?00"
     "?00" "?00" "?00"},

    // d2: object edge-diagonal nd, open side e, p2 toward w
    {"d2", 'D',
     "?00" "?00" "?00"
     "?0." "q1p" "?00"
     "?1." "?0." "?00"},

    // d3: object edge-diagonal nw, open side u, p2 toward d
    {"d3", 'D',
     "..0" ".p0" "000"
     "100" "010" "000"
     "???" "?q?" "???"},

    // d4: object edge-diagonal su, open side e, p2 toward w
    {"d4", 'D',
     "?00" "?0." "?1."
     "?00" "q1p" "?0."
     "?00" "?00" "?00"},

    // d5: object edge-diagonal eu, open side n, p2 toward s
    {"d5", 'D',
     "0.." "001" "???"
     "0p." "010" "?q?"
     "000" "000" "???"},

    // d6: object edge-diagonal wu, open side n, p2 toward s
    {"d6", 'D',
     "..0" "100" "???"
     ".p0" "010" "?q?"
     "000" "000" "???"},

    // d7: object edge-diagonal ne, open side u, p2 toward d
    {"d7", 'D',
     "0.." "0p." "000"
     "001" "010" "000"
     "???" "?q?" "???"},

    // d8: object edge-diagonal se, open side u, p2 toward d
    {"d8", 'D',
     "000" "0p." "0.."
     "000" "010" "001"
     "???" "?q?" "???"},

    // d9: object edge-diagonal sd, open side e, p2 toward w
    {"d9", 'D',
     "?00" "?00" "?00"
     "?00" "q1p" "?0."
     "?00" "?0." "?1."},

    // d10: object edge-diagonal sw, open side u, p2 toward d
    {"d10", 'D',
     "000" ".p0" "..0"
     "000" "010" "100"
     "???" "?q?" "???"},

    // d11: object edge-diagonal ed, open side n, p2 toward s
    {"d11", 'D',
     "000" "000" "???"
     "0p." "010" "?q?"
     "0.." "001" "???"},

    // d12: object edge-diagonal wd, open side n, p2 toward s
    {"d12", 'D',
     "000" "000" "???"
     ".p0" "010" "?q?"
     "..0" "100" "???"},
};

}  // namespace thin3d::detail
