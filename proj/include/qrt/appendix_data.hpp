#pragma once

// Reference product-coefficient tables for the twelve 5-vertex classes, stored as
// integer numerators over 120. Mirrors data/appendix.json.

#include <array>

namespace qrt::appendix {

inline constexpr int denominator = 120;

struct Tables {
        const char *name;
        std::array<std::array<int, 4>, 4> b2_1;
        std::array<std::array<int, 8>, 8> b3_2;
        std::array<std::array<int, 8>, 8> b3_3;
};

inline constexpr std::array<Tables, 12> tables{{
        Tables{"H8",
               {{
                    {10, 5, 0, 5},
                    {5, 10, 0, 5},
                    {0, 0, 0, 0},
                    {5, 5, 0, 10},
                }},
               {{
                    {2, 1, 0, 1, 0, 0, 0, 1},
                    {1, 2, 0, 1, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {1, 1, 0, 2, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {1, 1, 0, 1, 0, 0, 0, 2},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H9",
               {{
                    {6, 9, 0, 3},
                    {9, 6, 0, 3},
                    {0, 0, 0, 6},
                    {3, 3, 6, 6},
                }},
               {{
                    {0, 3, 0, 0, 0, 0, 0, 0},
                    {3, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 3, 0, 0, 0, 3},
                    {0, 0, 3, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 3, 0, 0, 0, 0, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 6},
                }}},
        Tables{"H10",
               {{
                    {4, 8, 1, 3},
                    {8, 4, 2, 2},
                    {1, 2, 2, 7},
                    {3, 2, 7, 4},
                }},
               {{
                    {0, 0, 1, 1, 0, 0, 0, 0},
                    {0, 0, 2, 0, 0, 0, 0, 0},
                    {1, 2, 2, 1, 0, 0, 0, 0},
                    {1, 0, 1, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 1, 0, 1, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 1},
                    {0, 1, 1, 1, 1, 1, 1, 0},
                }}},
        Tables{"H11",
               {{
                    {6, 6, 3, 3},
                    {6, 6, 0, 6},
                    {3, 0, 0, 3},
                    {3, 6, 3, 6},
                }},
               {{
                    {0, 0, 3, 0, 0, 0, 0, 0},
                    {0, 0, 0, 3, 0, 0, 0, 0},
                    {3, 0, 0, 0, 0, 0, 0, 0},
                    {0, 3, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 3},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 3, 0, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 3},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {3, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H12",
               {{
                    {0, 3, 6, 3},
                    {3, 0, 6, 3},
                    {6, 6, 6, 6},
                    {3, 3, 6, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 3, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 3, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 3, 0},
                    {0, 0, 0, 0, 0, 3, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 3},
                    {0, 0, 0, 0, 0, 3, 0, 0},
                    {0, 0, 0, 3, 0, 0, 0, 0},
                    {0, 0, 3, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 3, 0},
                    {0, 3, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 3, 0, 0, 0},
                    {3, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H13",
               {{
                    {2, 1, 4, 5},
                    {1, 2, 8, 1},
                    {4, 8, 8, 4},
                    {5, 1, 4, 2},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 2, 0, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {1, 1, 0, 0, 0, 0, 2, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 1, 1, 0, 1, 0},
                    {0, 1, 0, 0, 1, 1, 1, 0},
                    {0, 1, 0, 0, 1, 1, 1, 0},
                    {0, 1, 1, 1, 0, 1, 0, 0},
                    {0, 0, 1, 1, 1, 0, 1, 0},
                    {0, 1, 1, 1, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H14",
               {{
                    {4, 2, 3, 5},
                    {2, 4, 6, 2},
                    {3, 6, 6, 3},
                    {5, 2, 3, 4},
                }},
               {{
                    {0, 0, 0, 0, 1, 0, 0, 1},
                    {0, 0, 0, 0, 1, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 1, 0},
                    {1, 1, 0, 1, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 1, 0, 0, 0, 1},
                    {1, 0, 0, 0, 0, 0, 1, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 2, 0, 0, 0, 1, 0, 0},
                    {0, 0, 2, 1, 0, 0, 0, 0},
                    {0, 0, 1, 2, 0, 0, 0, 0},
                    {0, 0, 0, 0, 2, 0, 1, 0},
                    {0, 1, 0, 0, 0, 2, 0, 0},
                    {0, 0, 0, 0, 1, 0, 2, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H15",
               {{
                    {4, 2, 7, 3},
                    {2, 4, 2, 8},
                    {7, 2, 2, 1},
                    {3, 8, 1, 4},
                }},
               {{
                    {0, 0, 0, 0, 1, 0, 1, 0},
                    {0, 0, 0, 0, 0, 1, 0, 1},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 2, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 2, 0, 2, 0, 1},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, 1, 0, 0},
                }},
               {{
                    {0, 1, 1, 1, 1, 1, 1, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H16",
               {{
                    {6, 3, 6, 3},
                    {3, 6, 0, 9},
                    {6, 0, 0, 0},
                    {3, 9, 0, 6},
                }},
               {{
                    {0, 0, 0, 0, 0, 3, 0, 0},
                    {0, 0, 0, 0, 0, 3, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 3},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {3, 3, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 3, 0, 0, 0, 0},
                }},
               {{
                    {6, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
        Tables{"H17",
               {{
                    {2, 4, 5, 3},
                    {4, 2, 4, 4},
                    {5, 4, 4, 5},
                    {3, 4, 5, 2},
                }},
               {{
                    {0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 1, 1},
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 1, 0, 0, 0, 1, 0, 0},
                    {1, 0, 1, 0, 1, 0, 0, 0},
                    {0, 0, 1, 1, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, 0, 0},
                }},
               {{
                    {0, 1, 1, 0, 1, 0, 0, 0},
                    {1, 0, 0, 1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 1, 0},
                    {0, 1, 0, 0, 0, 0, 0, 1},
                    {1, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0, 1},
                    {0, 0, 1, 0, 0, 0, 0, 1},
                    {0, 0, 0, 1, 0, 1, 1, 0},
                }}},
        Tables{"H18",
               {{
                    {0, 3, 6, 3},
                    {3, 0, 6, 3},
                    {6, 6, 6, 6},
                    {3, 3, 6, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 1, 1, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 1, 1, 0},
                    {0, 0, 1, 0, 1, 0, 1, 0},
                    {0, 0, 1, 0, 1, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }},
               {{
                    {0, 0, 0, 1, 0, 1, 1, 0},
                    {0, 0, 1, 0, 1, 0, 0, 1},
                    {0, 1, 0, 0, 1, 0, 0, 1},
                    {1, 0, 0, 0, 0, 1, 1, 0},
                    {0, 1, 1, 0, 0, 0, 0, 1},
                    {1, 0, 0, 1, 0, 0, 1, 0},
                    {1, 0, 0, 1, 0, 1, 0, 0},
                    {0, 1, 1, 0, 1, 0, 0, 0},
                }}},
        Tables{"H19",
               {{
                    {0, 0, 5, 5},
                    {0, 0, 10, 0},
                    {5, 10, 10, 5},
                    {5, 0, 5, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 5, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 5, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }},
               {{
                    {0, 0, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 5, 0},
                    {0, 0, 0, 0, 0, 5, 0, 0},
                    {0, 0, 0, 0, 5, 0, 0, 0},
                    {0, 0, 0, 5, 0, 0, 0, 0},
                    {0, 0, 5, 0, 0, 0, 0, 0},
                    {0, 5, 0, 0, 0, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 0},
                }}},
}};

} // namespace qrt::appendix
