#pragma once

namespace thin3d::detail {

/// One literal template table. `cells` holds 27 characters: three 3x3
/// planes from z=+1 down to z=-1 around the candidate point, each plane
/// three rows north to south, each row three columns west to east.
/// Alphabet: '0' background, '1' object, '.' don't care, '?' member of
/// the at-least-one-object group, 'p'/'q' the Class D (p1, p2) cells.
struct TemplateRecord {
  const char* id;
  char cls;
  const char* cells;
};

extern const TemplateRecord kBaseTemplates[38];

}  // namespace thin3d::detail
