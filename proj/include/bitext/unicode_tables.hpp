// Generated by scripts/gen_unicode_tables.py from Python
// unicodedata 13.0.0. Do not edit by hand.
#ifndef BITEXT_UNICODE_TABLES_HPP
#define BITEXT_UNICODE_TABLES_HPP

#include <cstdint>

namespace bitext::tables {

struct CpRange {
  char32_t lo;
  char32_t hi;
};

inline constexpr CpRange kUppercase[] = {
    {0x41, 0x5A}, {0xC0, 0xD6}, {0xD8, 0xDE}, {0x100, 0x100},
    {0x102, 0x102}, {0x104, 0x104}, {0x106, 0x106}, {0x108, 0x108},
    {0x10A, 0x10A}, {0x10C, 0x10C}, {0x10E, 0x10E}, {0x110, 0x110},
    {0x112, 0x112}, {0x114, 0x114}, {0x116, 0x116}, {0x118, 0x118},
    {0x11A, 0x11A}, {0x11C, 0x11C}, {0x11E, 0x11E}, {0x120, 0x120},
    {0x122, 0x122}, {0x124, 0x124}, {0x126, 0x126}, {0x128, 0x128},
    {0x12A, 0x12A}, {0x12C, 0x12C}, {0x12E, 0x12E}, {0x130, 0x130},
    {0x132, 0x132}, {0x134, 0x134}, {0x136, 0x136}, {0x139, 0x139},
    {0x13B, 0x13B}, {0x13D, 0x13D}, {0x13F, 0x13F}, {0x141, 0x141},
    {0x143, 0x143}, {0x145, 0x145}, {0x147, 0x147}, {0x14A, 0x14A},
    {0x14C, 0x14C}, {0x14E, 0x14E}, {0x150, 0x150}, {0x152, 0x152},
    {0x154, 0x154}, {0x156, 0x156}, {0x158, 0x158}, {0x15A, 0x15A},
    {0x15C, 0x15C}, {0x15E, 0x15E}, {0x160, 0x160}, {0x162, 0x162},
    {0x164, 0x164}, {0x166, 0x166}, {0x168, 0x168}, {0x16A, 0x16A},
    {0x16C, 0x16C}, {0x16E, 0x16E}, {0x170, 0x170}, {0x172, 0x172},
    {0x174, 0x174}, {0x176, 0x176}, {0x178, 0x179}, {0x17B, 0x17B},
    {0x17D, 0x17D}, {0x181, 0x182}, {0x184, 0x184}, {0x186, 0x187},
    {0x189, 0x18B}, {0x18E, 0x191}, {0x193, 0x194}, {0x196, 0x198},
    {0x19C, 0x19D}, {0x19F, 0x1A0}, {0x1A2, 0x1A2}, {0x1A4, 0x1A4},
    {0x1A6, 0x1A7}, {0x1A9, 0x1A9}, {0x1AC, 0x1AC}, {0x1AE, 0x1AF},
    {0x1B1, 0x1B3}, {0x1B5, 0x1B5}, {0x1B7, 0x1B8}, {0x1BC, 0x1BC},
    {0x1C4, 0x1C4}, {0x1C7, 0x1C7}, {0x1CA, 0x1CA}, {0x1CD, 0x1CD},
    {0x1CF, 0x1CF}, {0x1D1, 0x1D1}, {0x1D3, 0x1D3}, {0x1D5, 0x1D5},
    {0x1D7, 0x1D7}, {0x1D9, 0x1D9}, {0x1DB, 0x1DB}, {0x1DE, 0x1DE},
    {0x1E0, 0x1E0}, {0x1E2, 0x1E2}, {0x1E4, 0x1E4}, {0x1E6, 0x1E6},
    {0x1E8, 0x1E8}, {0x1EA, 0x1EA}, {0x1EC, 0x1EC}, {0x1EE, 0x1EE},
    {0x1F1, 0x1F1}, {0x1F4, 0x1F4}, {0x1F6, 0x1F8}, {0x1FA, 0x1FA},
    {0x1FC, 0x1FC}, {0x1FE, 0x1FE}, {0x200, 0x200}, {0x202, 0x202},
    {0x204, 0x204}, {0x206, 0x206}, {0x208, 0x208}, {0x20A, 0x20A},
    {0x20C, 0x20C}, {0x20E, 0x20E}, {0x210, 0x210}, {0x212, 0x212},
    {0x214, 0x214}, {0x216, 0x216}, {0x218, 0x218}, {0x21A, 0x21A},
    {0x21C, 0x21C}, {0x21E, 0x21E}, {0x220, 0x220}, {0x222, 0x222},
    {0x224, 0x224}, {0x226, 0x226}, {0x228, 0x228}, {0x22A, 0x22A},
    {0x22C, 0x22C}, {0x22E, 0x22E}, {0x230, 0x230}, {0x232, 0x232},
    {0x23A, 0x23B}, {0x23D, 0x23E}, {0x241, 0x241}, {0x243, 0x246},
    {0x248, 0x248}, {0x24A, 0x24A}, {0x24C, 0x24C}, {0x24E, 0x24E},
    {0x370, 0x370}, {0x372, 0x372}, {0x376, 0x376}, {0x37F, 0x37F},
    {0x386, 0x386}, {0x388, 0x38A}, {0x38C, 0x38C}, {0x38E, 0x38F},
    {0x391, 0x3A1}, {0x3A3, 0x3AB}, {0x3CF, 0x3CF}, {0x3D2, 0x3D4},
    {0x3D8, 0x3D8}, {0x3DA, 0x3DA}, {0x3DC, 0x3DC}, {0x3DE, 0x3DE},
    {0x3E0, 0x3E0}, {0x3E2, 0x3E2}, {0x3E4, 0x3E4}, {0x3E6, 0x3E6},
    {0x3E8, 0x3E8}, {0x3EA, 0x3EA}, {0x3EC, 0x3EC}, {0x3EE, 0x3EE},
    {0x3F4, 0x3F4}, {0x3F7, 0x3F7}, {0x3F9, 0x3FA}, {0x3FD, 0x42F},
    {0x460, 0x460}, {0x462, 0x462}, {0x464, 0x464}, {0x466, 0x466},
    {0x468, 0x468}, {0x46A, 0x46A}, {0x46C, 0x46C}, {0x46E, 0x46E},
    {0x470, 0x470}, {0x472, 0x472}, {0x474, 0x474}, {0x476, 0x476},
    {0x478, 0x478}, {0x47A, 0x47A}, {0x47C, 0x47C}, {0x47E, 0x47E},
    {0x480, 0x480}, {0x48A, 0x48A}, {0x48C, 0x48C}, {0x48E, 0x48E},
    {0x490, 0x490}, {0x492, 0x492}, {0x494, 0x494}, {0x496, 0x496},
    {0x498, 0x498}, {0x49A, 0x49A}, {0x49C, 0x49C}, {0x49E, 0x49E},
    {0x4A0, 0x4A0}, {0x4A2, 0x4A2}, {0x4A4, 0x4A4}, {0x4A6, 0x4A6},
    {0x4A8, 0x4A8}, {0x4AA, 0x4AA}, {0x4AC, 0x4AC}, {0x4AE, 0x4AE},
    {0x4B0, 0x4B0}, {0x4B2, 0x4B2}, {0x4B4, 0x4B4}, {0x4B6, 0x4B6},
    {0x4B8, 0x4B8}, {0x4BA, 0x4BA}, {0x4BC, 0x4BC}, {0x4BE, 0x4BE},
    {0x4C0, 0x4C1}, {0x4C3, 0x4C3}, {0x4C5, 0x4C5}, {0x4C7, 0x4C7},
    {0x4C9, 0x4C9}, {0x4CB, 0x4CB}, {0x4CD, 0x4CD}, {0x4D0, 0x4D0},
    {0x4D2, 0x4D2}, {0x4D4, 0x4D4}, {0x4D6, 0x4D6}, {0x4D8, 0x4D8},
    {0x4DA, 0x4DA}, {0x4DC, 0x4DC}, {0x4DE, 0x4DE}, {0x4E0, 0x4E0},
    {0x4E2, 0x4E2}, {0x4E4, 0x4E4}, {0x4E6, 0x4E6}, {0x4E8, 0x4E8},
    {0x4EA, 0x4EA}, {0x4EC, 0x4EC}, {0x4EE, 0x4EE}, {0x4F0, 0x4F0},
    {0x4F2, 0x4F2}, {0x4F4, 0x4F4}, {0x4F6, 0x4F6}, {0x4F8, 0x4F8},
    {0x4FA, 0x4FA}, {0x4FC, 0x4FC}, {0x4FE, 0x4FE}, {0x500, 0x500},
    {0x502, 0x502}, {0x504, 0x504}, {0x506, 0x506}, {0x508, 0x508},
    {0x50A, 0x50A}, {0x50C, 0x50C}, {0x50E, 0x50E}, {0x510, 0x510},
    {0x512, 0x512}, {0x514, 0x514}, {0x516, 0x516}, {0x518, 0x518},
    {0x51A, 0x51A}, {0x51C, 0x51C}, {0x51E, 0x51E}, {0x520, 0x520},
    {0x522, 0x522}, {0x524, 0x524}, {0x526, 0x526}, {0x528, 0x528},
    {0x52A, 0x52A}, {0x52C, 0x52C}, {0x52E, 0x52E}, {0x531, 0x556},
    {0x10A0, 0x10C5}, {0x10C7, 0x10C7}, {0x10CD, 0x10CD}, {0x13A0, 0x13F5},
    {0x1C90, 0x1CBA}, {0x1CBD, 0x1CBF}, {0x1E00, 0x1E00}, {0x1E02, 0x1E02},
    {0x1E04, 0x1E04}, {0x1E06, 0x1E06}, {0x1E08, 0x1E08}, {0x1E0A, 0x1E0A},
    {0x1E0C, 0x1E0C}, {0x1E0E, 0x1E0E}, {0x1E10, 0x1E10}, {0x1E12, 0x1E12},
    {0x1E14, 0x1E14}, {0x1E16, 0x1E16}, {0x1E18, 0x1E18}, {0x1E1A, 0x1E1A},
    {0x1E1C, 0x1E1C}, {0x1E1E, 0x1E1E}, {0x1E20, 0x1E20}, {0x1E22, 0x1E22},
    {0x1E24, 0x1E24}, {0x1E26, 0x1E26}, {0x1E28, 0x1E28}, {0x1E2A, 0x1E2A},
    {0x1E2C, 0x1E2C}, {0x1E2E, 0x1E2E}, {0x1E30, 0x1E30}, {0x1E32, 0x1E32},
    {0x1E34, 0x1E34}, {0x1E36, 0x1E36}, {0x1E38, 0x1E38}, {0x1E3A, 0x1E3A},
    {0x1E3C, 0x1E3C}, {0x1E3E, 0x1E3E}, {0x1E40, 0x1E40}, {0x1E42, 0x1E42},
    {0x1E44, 0x1E44}, {0x1E46, 0x1E46}, {0x1E48, 0x1E48}, {0x1E4A, 0x1E4A},
    {0x1E4C, 0x1E4C}, {0x1E4E, 0x1E4E}, {0x1E50, 0x1E50}, {0x1E52, 0x1E52},
    {0x1E54, 0x1E54}, {0x1E56, 0x1E56}, {0x1E58, 0x1E58}, {0x1E5A, 0x1E5A},
    {0x1E5C, 0x1E5C}, {0x1E5E, 0x1E5E}, {0x1E60, 0x1E60}, {0x1E62, 0x1E62},
    {0x1E64, 0x1E64}, {0x1E66, 0x1E66}, {0x1E68, 0x1E68}, {0x1E6A, 0x1E6A},
    {0x1E6C, 0x1E6C}, {0x1E6E, 0x1E6E}, {0x1E70, 0x1E70}, {0x1E72, 0x1E72},
    {0x1E74, 0x1E74}, {0x1E76, 0x1E76}, {0x1E78, 0x1E78}, {0x1E7A, 0x1E7A},
    {0x1E7C, 0x1E7C}, {0x1E7E, 0x1E7E}, {0x1E80, 0x1E80}, {0x1E82, 0x1E82},
    {0x1E84, 0x1E84}, {0x1E86, 0x1E86}, {0x1E88, 0x1E88}, {0x1E8A, 0x1E8A},
    {0x1E8C, 0x1E8C}, {0x1E8E, 0x1E8E}, {0x1E90, 0x1E90}, {0x1E92, 0x1E92},
    {0x1E94, 0x1E94}, {0x1E9E, 0x1E9E}, {0x1EA0, 0x1EA0}, {0x1EA2, 0x1EA2},
    {0x1EA4, 0x1EA4}, {0x1EA6, 0x1EA6}, {0x1EA8, 0x1EA8}, {0x1EAA, 0x1EAA},
    {0x1EAC, 0x1EAC}, {0x1EAE, 0x1EAE}, {0x1EB0, 0x1EB0}, {0x1EB2, 0x1EB2},
    {0x1EB4, 0x1EB4}, {0x1EB6, 0x1EB6}, {0x1EB8, 0x1EB8}, {0x1EBA, 0x1EBA},
    {0x1EBC, 0x1EBC}, {0x1EBE, 0x1EBE}, {0x1EC0, 0x1EC0}, {0x1EC2, 0x1EC2},
    {0x1EC4, 0x1EC4}, {0x1EC6, 0x1EC6}, {0x1EC8, 0x1EC8}, {0x1ECA, 0x1ECA},
    {0x1ECC, 0x1ECC}, {0x1ECE, 0x1ECE}, {0x1ED0, 0x1ED0}, {0x1ED2, 0x1ED2},
    {0x1ED4, 0x1ED4}, {0x1ED6, 0x1ED6}, {0x1ED8, 0x1ED8}, {0x1EDA, 0x1EDA},
    {0x1EDC, 0x1EDC}, {0x1EDE, 0x1EDE}, {0x1EE0, 0x1EE0}, {0x1EE2, 0x1EE2},
    {0x1EE4, 0x1EE4}, {0x1EE6, 0x1EE6}, {0x1EE8, 0x1EE8}, {0x1EEA, 0x1EEA},
    {0x1EEC, 0x1EEC}, {0x1EEE, 0x1EEE}, {0x1EF0, 0x1EF0}, {0x1EF2, 0x1EF2},
    {0x1EF4, 0x1EF4}, {0x1EF6, 0x1EF6}, {0x1EF8, 0x1EF8}, {0x1EFA, 0x1EFA},
    {0x1EFC, 0x1EFC}, {0x1EFE, 0x1EFE}, {0x1F08, 0x1F0F}, {0x1F18, 0x1F1D},
    {0x1F28, 0x1F2F}, {0x1F38, 0x1F3F}, {0x1F48, 0x1F4D}, {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B}, {0x1F5D, 0x1F5D}, {0x1F5F, 0x1F5F}, {0x1F68, 0x1F6F},
    {0x1FB8, 0x1FBB}, {0x1FC8, 0x1FCB}, {0x1FD8, 0x1FDB}, {0x1FE8, 0x1FEC},
    {0x1FF8, 0x1FFB}, {0x2102, 0x2102}, {0x2107, 0x2107}, {0x210B, 0x210D},
    {0x2110, 0x2112}, {0x2115, 0x2115}, {0x2119, 0x211D}, {0x2124, 0x2124},
    {0x2126, 0x2126}, {0x2128, 0x2128}, {0x212A, 0x212D}, {0x2130, 0x2133},
    {0x213E, 0x213F}, {0x2145, 0x2145}, {0x2183, 0x2183}, {0x2C00, 0x2C2E},
    {0x2C60, 0x2C60}, {0x2C62, 0x2C64}, {0x2C67, 0x2C67}, {0x2C69, 0x2C69},
    {0x2C6B, 0x2C6B}, {0x2C6D, 0x2C70}, {0x2C72, 0x2C72}, {0x2C75, 0x2C75},
    {0x2C7E, 0x2C80}, {0x2C82, 0x2C82}, {0x2C84, 0x2C84}, {0x2C86, 0x2C86},
    {0x2C88, 0x2C88}, {0x2C8A, 0x2C8A}, {0x2C8C, 0x2C8C}, {0x2C8E, 0x2C8E},
    {0x2C90, 0x2C90}, {0x2C92, 0x2C92}, {0x2C94, 0x2C94}, {0x2C96, 0x2C96},
    {0x2C98, 0x2C98}, {0x2C9A, 0x2C9A}, {0x2C9C, 0x2C9C}, {0x2C9E, 0x2C9E},
    {0x2CA0, 0x2CA0}, {0x2CA2, 0x2CA2}, {0x2CA4, 0x2CA4}, {0x2CA6, 0x2CA6},
    {0x2CA8, 0x2CA8}, {0x2CAA, 0x2CAA}, {0x2CAC, 0x2CAC}, {0x2CAE, 0x2CAE},
    {0x2CB0, 0x2CB0}, {0x2CB2, 0x2CB2}, {0x2CB4, 0x2CB4}, {0x2CB6, 0x2CB6},
    {0x2CB8, 0x2CB8}, {0x2CBA, 0x2CBA}, {0x2CBC, 0x2CBC}, {0x2CBE, 0x2CBE},
    {0x2CC0, 0x2CC0}, {0x2CC2, 0x2CC2}, {0x2CC4, 0x2CC4}, {0x2CC6, 0x2CC6},
    {0x2CC8, 0x2CC8}, {0x2CCA, 0x2CCA}, {0x2CCC, 0x2CCC}, {0x2CCE, 0x2CCE},
    {0x2CD0, 0x2CD0}, {0x2CD2, 0x2CD2}, {0x2CD4, 0x2CD4}, {0x2CD6, 0x2CD6},
    {0x2CD8, 0x2CD8}, {0x2CDA, 0x2CDA}, {0x2CDC, 0x2CDC}, {0x2CDE, 0x2CDE},
    {0x2CE0, 0x2CE0}, {0x2CE2, 0x2CE2}, {0x2CEB, 0x2CEB}, {0x2CED, 0x2CED},
    {0x2CF2, 0x2CF2}, {0xA640, 0xA640}, {0xA642, 0xA642}, {0xA644, 0xA644},
    {0xA646, 0xA646}, {0xA648, 0xA648}, {0xA64A, 0xA64A}, {0xA64C, 0xA64C},
    {0xA64E, 0xA64E}, {0xA650, 0xA650}, {0xA652, 0xA652}, {0xA654, 0xA654},
    {0xA656, 0xA656}, {0xA658, 0xA658}, {0xA65A, 0xA65A}, {0xA65C, 0xA65C},
    {0xA65E, 0xA65E}, {0xA660, 0xA660}, {0xA662, 0xA662}, {0xA664, 0xA664},
    {0xA666, 0xA666}, {0xA668, 0xA668}, {0xA66A, 0xA66A}, {0xA66C, 0xA66C},
    {0xA680, 0xA680}, {0xA682, 0xA682}, {0xA684, 0xA684}, {0xA686, 0xA686},
    {0xA688, 0xA688}, {0xA68A, 0xA68A}, {0xA68C, 0xA68C}, {0xA68E, 0xA68E},
    {0xA690, 0xA690}, {0xA692, 0xA692}, {0xA694, 0xA694}, {0xA696, 0xA696},
    {0xA698, 0xA698}, {0xA69A, 0xA69A}, {0xA722, 0xA722}, {0xA724, 0xA724},
    {0xA726, 0xA726}, {0xA728, 0xA728}, {0xA72A, 0xA72A}, {0xA72C, 0xA72C},
    {0xA72E, 0xA72E}, {0xA732, 0xA732}, {0xA734, 0xA734}, {0xA736, 0xA736},
    {0xA738, 0xA738}, {0xA73A, 0xA73A}, {0xA73C, 0xA73C}, {0xA73E, 0xA73E},
    {0xA740, 0xA740}, {0xA742, 0xA742}, {0xA744, 0xA744}, {0xA746, 0xA746},
    {0xA748, 0xA748}, {0xA74A, 0xA74A}, {0xA74C, 0xA74C}, {0xA74E, 0xA74E},
    {0xA750, 0xA750}, {0xA752, 0xA752}, {0xA754, 0xA754}, {0xA756, 0xA756},
    {0xA758, 0xA758}, {0xA75A, 0xA75A}, {0xA75C, 0xA75C}, {0xA75E, 0xA75E},
    {0xA760, 0xA760}, {0xA762, 0xA762}, {0xA764, 0xA764}, {0xA766, 0xA766},
    {0xA768, 0xA768}, {0xA76A, 0xA76A}, {0xA76C, 0xA76C}, {0xA76E, 0xA76E},
    {0xA779, 0xA779}, {0xA77B, 0xA77B}, {0xA77D, 0xA77E}, {0xA780, 0xA780},
    {0xA782, 0xA782}, {0xA784, 0xA784}, {0xA786, 0xA786}, {0xA78B, 0xA78B},
    {0xA78D, 0xA78D}, {0xA790, 0xA790}, {0xA792, 0xA792}, {0xA796, 0xA796},
    {0xA798, 0xA798}, {0xA79A, 0xA79A}, {0xA79C, 0xA79C}, {0xA79E, 0xA79E},
    {0xA7A0, 0xA7A0}, {0xA7A2, 0xA7A2}, {0xA7A4, 0xA7A4}, {0xA7A6, 0xA7A6},
    {0xA7A8, 0xA7A8}, {0xA7AA, 0xA7AE}, {0xA7B0, 0xA7B4}, {0xA7B6, 0xA7B6},
    {0xA7B8, 0xA7B8}, {0xA7BA, 0xA7BA}, {0xA7BC, 0xA7BC}, {0xA7BE, 0xA7BE},
    {0xA7C2, 0xA7C2}, {0xA7C4, 0xA7C7}, {0xA7C9, 0xA7C9}, {0xA7F5, 0xA7F5},
    {0xFF21, 0xFF3A}, {0x10400, 0x10427}, {0x104B0, 0x104D3}, {0x10C80, 0x10CB2},
    {0x118A0, 0x118BF}, {0x16E40, 0x16E5F}, {0x1D400, 0x1D419}, {0x1D434, 0x1D44D},
    {0x1D468, 0x1D481}, {0x1D49C, 0x1D49C}, {0x1D49E, 0x1D49F}, {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6}, {0x1D4A9, 0x1D4AC}, {0x1D4AE, 0x1D4B5}, {0x1D4D0, 0x1D4E9},
    {0x1D504, 0x1D505}, {0x1D507, 0x1D50A}, {0x1D50D, 0x1D514}, {0x1D516, 0x1D51C},
    {0x1D538, 0x1D539}, {0x1D53B, 0x1D53E}, {0x1D540, 0x1D544}, {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550}, {0x1D56C, 0x1D585}, {0x1D5A0, 0x1D5B9}, {0x1D5D4, 0x1D5ED},
    {0x1D608, 0x1D621}, {0x1D63C, 0x1D655}, {0x1D670, 0x1D689}, {0x1D6A8, 0x1D6C0},
    {0x1D6E2, 0x1D6FA}, {0x1D71C, 0x1D734}, {0x1D756, 0x1D76E}, {0x1D790, 0x1D7A8},
    {0x1D7CA, 0x1D7CA}, {0x1E900, 0x1E921},
};

inline constexpr CpRange kDecimalDigit[] = {
    {0x30, 0x39}, {0x660, 0x669}, {0x6F0, 0x6F9}, {0x7C0, 0x7C9},
    {0x966, 0x96F}, {0x9E6, 0x9EF}, {0xA66, 0xA6F}, {0xAE6, 0xAEF},
    {0xB66, 0xB6F}, {0xBE6, 0xBEF}, {0xC66, 0xC6F}, {0xCE6, 0xCEF},
    {0xD66, 0xD6F}, {0xDE6, 0xDEF}, {0xE50, 0xE59}, {0xED0, 0xED9},
    {0xF20, 0xF29}, {0x1040, 0x1049}, {0x1090, 0x1099}, {0x17E0, 0x17E9},
    {0x1810, 0x1819}, {0x1946, 0x194F}, {0x19D0, 0x19D9}, {0x1A80, 0x1A89},
    {0x1A90, 0x1A99}, {0x1B50, 0x1B59}, {0x1BB0, 0x1BB9}, {0x1C40, 0x1C49},
    {0x1C50, 0x1C59}, {0xA620, 0xA629}, {0xA8D0, 0xA8D9}, {0xA900, 0xA909},
    {0xA9D0, 0xA9D9}, {0xA9F0, 0xA9F9}, {0xAA50, 0xAA59}, {0xABF0, 0xABF9},
    {0xFF10, 0xFF19}, {0x104A0, 0x104A9}, {0x10D30, 0x10D39}, {0x11066, 0x1106F},
    {0x110F0, 0x110F9}, {0x11136, 0x1113F}, {0x111D0, 0x111D9}, {0x112F0, 0x112F9},
    {0x11450, 0x11459}, {0x114D0, 0x114D9}, {0x11650, 0x11659}, {0x116C0, 0x116C9},
    {0x11730, 0x11739}, {0x118E0, 0x118E9}, {0x11950, 0x11959}, {0x11C50, 0x11C59},
    {0x11D50, 0x11D59}, {0x11DA0, 0x11DA9}, {0x16A60, 0x16A69}, {0x16B50, 0x16B59},
    {0x1D7CE, 0x1D7FF}, {0x1E140, 0x1E149}, {0x1E2F0, 0x1E2F9}, {0x1E950, 0x1E959},
    {0x1FBF0, 0x1FBF9},
};

inline constexpr CpRange kPunctuation[] = {
    {0x21, 0x23}, {0x25, 0x2A}, {0x2C, 0x2F}, {0x3A, 0x3B},
    {0x3F, 0x40}, {0x5B, 0x5D}, {0x5F, 0x5F}, {0x7B, 0x7B},
    {0x7D, 0x7D}, {0xA1, 0xA1}, {0xA7, 0xA7}, {0xAB, 0xAB},
    {0xB6, 0xB7}, {0xBB, 0xBB}, {0xBF, 0xBF}, {0x37E, 0x37E},
    {0x387, 0x387}, {0x55A, 0x55F}, {0x589, 0x58A}, {0x5BE, 0x5BE},
    {0x5C0, 0x5C0}, {0x5C3, 0x5C3}, {0x5C6, 0x5C6}, {0x5F3, 0x5F4},
    {0x609, 0x60A}, {0x60C, 0x60D}, {0x61B, 0x61B}, {0x61E, 0x61F},
    {0x66A, 0x66D}, {0x6D4, 0x6D4}, {0x700, 0x70D}, {0x7F7, 0x7F9},
    {0x830, 0x83E}, {0x85E, 0x85E}, {0x964, 0x965}, {0x970, 0x970},
    {0x9FD, 0x9FD}, {0xA76, 0xA76}, {0xAF0, 0xAF0}, {0xC77, 0xC77},
    {0xC84, 0xC84}, {0xDF4, 0xDF4}, {0xE4F, 0xE4F}, {0xE5A, 0xE5B},
    {0xF04, 0xF12}, {0xF14, 0xF14}, {0xF3A, 0xF3D}, {0xF85, 0xF85},
    {0xFD0, 0xFD4}, {0xFD9, 0xFDA}, {0x104A, 0x104F}, {0x10FB, 0x10FB},
    {0x1360, 0x1368}, {0x1400, 0x1400}, {0x166E, 0x166E}, {0x169B, 0x169C},
    {0x16EB, 0x16ED}, {0x1735, 0x1736}, {0x17D4, 0x17D6}, {0x17D8, 0x17DA},
    {0x1800, 0x180A}, {0x1944, 0x1945}, {0x1A1E, 0x1A1F}, {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD}, {0x1B5A, 0x1B60}, {0x1BFC, 0x1BFF}, {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F}, {0x1CC0, 0x1CC7}, {0x1CD3, 0x1CD3}, {0x2010, 0x2027},
    {0x2030, 0x2043}, {0x2045, 0x2051}, {0x2053, 0x205E}, {0x207D, 0x207E},
    {0x208D, 0x208E}, {0x2308, 0x230B}, {0x2329, 0x232A}, {0x2768, 0x2775},
    {0x27C5, 0x27C6}, {0x27E6, 0x27EF}, {0x2983, 0x2998}, {0x29D8, 0x29DB},
    {0x29FC, 0x29FD}, {0x2CF9, 0x2CFC}, {0x2CFE, 0x2CFF}, {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E}, {0x2E30, 0x2E4F}, {0x2E52, 0x2E52}, {0x3001, 0x3003},
    {0x3008, 0x3011}, {0x3014, 0x301F}, {0x3030, 0x3030}, {0x303D, 0x303D},
    {0x30A0, 0x30A0}, {0x30FB, 0x30FB}, {0xA4FE, 0xA4FF}, {0xA60D, 0xA60F},
    {0xA673, 0xA673}, {0xA67E, 0xA67E}, {0xA6F2, 0xA6F7}, {0xA874, 0xA877},
    {0xA8CE, 0xA8CF}, {0xA8F8, 0xA8FA}, {0xA8FC, 0xA8FC}, {0xA92E, 0xA92F},
    {0xA95F, 0xA95F}, {0xA9C1, 0xA9CD}, {0xA9DE, 0xA9DF}, {0xAA5C, 0xAA5F},
    {0xAADE, 0xAADF}, {0xAAF0, 0xAAF1}, {0xABEB, 0xABEB}, {0xFD3E, 0xFD3F},
    {0xFE10, 0xFE19}, {0xFE30, 0xFE52}, {0xFE54, 0xFE61}, {0xFE63, 0xFE63},
    {0xFE68, 0xFE68}, {0xFE6A, 0xFE6B}, {0xFF01, 0xFF03}, {0xFF05, 0xFF0A},
    {0xFF0C, 0xFF0F}, {0xFF1A, 0xFF1B}, {0xFF1F, 0xFF20}, {0xFF3B, 0xFF3D},
    {0xFF3F, 0xFF3F}, {0xFF5B, 0xFF5B}, {0xFF5D, 0xFF5D}, {0xFF5F, 0xFF65},
    {0x10100, 0x10102}, {0x1039F, 0x1039F}, {0x103D0, 0x103D0}, {0x1056F, 0x1056F},
    {0x10857, 0x10857}, {0x1091F, 0x1091F}, {0x1093F, 0x1093F}, {0x10A50, 0x10A58},
    {0x10A7F, 0x10A7F}, {0x10AF0, 0x10AF6}, {0x10B39, 0x10B3F}, {0x10B99, 0x10B9C},
    {0x10EAD, 0x10EAD}, {0x10F55, 0x10F59}, {0x11047, 0x1104D}, {0x110BB, 0x110BC},
    {0x110BE, 0x110C1}, {0x11140, 0x11143}, {0x11174, 0x11175}, {0x111C5, 0x111C8},
    {0x111CD, 0x111CD}, {0x111DB, 0x111DB}, {0x111DD, 0x111DF}, {0x11238, 0x1123D},
    {0x112A9, 0x112A9}, {0x1144B, 0x1144F}, {0x1145A, 0x1145B}, {0x1145D, 0x1145D},
    {0x114C6, 0x114C6}, {0x115C1, 0x115D7}, {0x11641, 0x11643}, {0x11660, 0x1166C},
    {0x1173C, 0x1173E}, {0x1183B, 0x1183B}, {0x11944, 0x11946}, {0x119E2, 0x119E2},
    {0x11A3F, 0x11A46}, {0x11A9A, 0x11A9C}, {0x11A9E, 0x11AA2}, {0x11C41, 0x11C45},
    {0x11C70, 0x11C71}, {0x11EF7, 0x11EF8}, {0x11FFF, 0x11FFF}, {0x12470, 0x12474},
    {0x16A6E, 0x16A6F}, {0x16AF5, 0x16AF5}, {0x16B37, 0x16B3B}, {0x16B44, 0x16B44},
    {0x16E97, 0x16E9A}, {0x16FE2, 0x16FE2}, {0x1BC9F, 0x1BC9F}, {0x1DA87, 0x1DA8B},
    {0x1E95E, 0x1E95F},
};

inline constexpr CpRange kAlphanumeric[] = {
    {0x30, 0x39}, {0x41, 0x5A}, {0x61, 0x7A}, {0xAA, 0xAA},
    {0xB2, 0xB3}, {0xB5, 0xB5}, {0xB9, 0xBA}, {0xBC, 0xBE},
    {0xC0, 0xD6}, {0xD8, 0xF6}, {0xF8, 0x2C1}, {0x2C6, 0x2D1},
    {0x2E0, 0x2E4}, {0x2EC, 0x2EC}, {0x2EE, 0x2EE}, {0x370, 0x374},
    {0x376, 0x377}, {0x37A, 0x37D}, {0x37F, 0x37F}, {0x386, 0x386},
    {0x388, 0x38A}, {0x38C, 0x38C}, {0x38E, 0x3A1}, {0x3A3, 0x3F5},
    {0x3F7, 0x481}, {0x48A, 0x52F}, {0x531, 0x556}, {0x559, 0x559},
    {0x560, 0x588}, {0x5D0, 0x5EA}, {0x5EF, 0x5F2}, {0x620, 0x64A},
    {0x660, 0x669}, {0x66E, 0x66F}, {0x671, 0x6D3}, {0x6D5, 0x6D5},
    {0x6E5, 0x6E6}, {0x6EE, 0x6FC}, {0x6FF, 0x6FF}, {0x710, 0x710},
    {0x712, 0x72F}, {0x74D, 0x7A5}, {0x7B1, 0x7B1}, {0x7C0, 0x7EA},
    {0x7F4, 0x7F5}, {0x7FA, 0x7FA}, {0x800, 0x815}, {0x81A, 0x81A},
    {0x824, 0x824}, {0x828, 0x828}, {0x840, 0x858}, {0x860, 0x86A},
    {0x8A0, 0x8B4}, {0x8B6, 0x8C7}, {0x904, 0x939}, {0x93D, 0x93D},
    {0x950, 0x950}, {0x958, 0x961}, {0x966, 0x96F}, {0x971, 0x980},
    {0x985, 0x98C}, {0x98F, 0x990}, {0x993, 0x9A8}, {0x9AA, 0x9B0},
    {0x9B2, 0x9B2}, {0x9B6, 0x9B9}, {0x9BD, 0x9BD}, {0x9CE, 0x9CE},
    {0x9DC, 0x9DD}, {0x9DF, 0x9E1}, {0x9E6, 0x9F1}, {0x9F4, 0x9F9},
    {0x9FC, 0x9FC}, {0xA05, 0xA0A}, {0xA0F, 0xA10}, {0xA13, 0xA28},
    {0xA2A, 0xA30}, {0xA32, 0xA33}, {0xA35, 0xA36}, {0xA38, 0xA39},
    {0xA59, 0xA5C}, {0xA5E, 0xA5E}, {0xA66, 0xA6F}, {0xA72, 0xA74},
    {0xA85, 0xA8D}, {0xA8F, 0xA91}, {0xA93, 0xAA8}, {0xAAA, 0xAB0},
    {0xAB2, 0xAB3}, {0xAB5, 0xAB9}, {0xABD, 0xABD}, {0xAD0, 0xAD0},
    {0xAE0, 0xAE1}, {0xAE6, 0xAEF}, {0xAF9, 0xAF9}, {0xB05, 0xB0C},
    {0xB0F, 0xB10}, {0xB13, 0xB28}, {0xB2A, 0xB30}, {0xB32, 0xB33},
    {0xB35, 0xB39}, {0xB3D, 0xB3D}, {0xB5C, 0xB5D}, {0xB5F, 0xB61},
    {0xB66, 0xB6F}, {0xB71, 0xB77}, {0xB83, 0xB83}, {0xB85, 0xB8A},
    {0xB8E, 0xB90}, {0xB92, 0xB95}, {0xB99, 0xB9A}, {0xB9C, 0xB9C},
    {0xB9E, 0xB9F}, {0xBA3, 0xBA4}, {0xBA8, 0xBAA}, {0xBAE, 0xBB9},
    {0xBD0, 0xBD0}, {0xBE6, 0xBF2}, {0xC05, 0xC0C}, {0xC0E, 0xC10},
    {0xC12, 0xC28}, {0xC2A, 0xC39}, {0xC3D, 0xC3D}, {0xC58, 0xC5A},
    {0xC60, 0xC61}, {0xC66, 0xC6F}, {0xC78, 0xC7E}, {0xC80, 0xC80},
    {0xC85, 0xC8C}, {0xC8E, 0xC90}, {0xC92, 0xCA8}, {0xCAA, 0xCB3},
    {0xCB5, 0xCB9}, {0xCBD, 0xCBD}, {0xCDE, 0xCDE}, {0xCE0, 0xCE1},
    {0xCE6, 0xCEF}, {0xCF1, 0xCF2}, {0xD04, 0xD0C}, {0xD0E, 0xD10},
    {0xD12, 0xD3A}, {0xD3D, 0xD3D}, {0xD4E, 0xD4E}, {0xD54, 0xD56},
    {0xD58, 0xD61}, {0xD66, 0xD78}, {0xD7A, 0xD7F}, {0xD85, 0xD96},
    {0xD9A, 0xDB1}, {0xDB3, 0xDBB}, {0xDBD, 0xDBD}, {0xDC0, 0xDC6},
    {0xDE6, 0xDEF}, {0xE01, 0xE30}, {0xE32, 0xE33}, {0xE40, 0xE46},
    {0xE50, 0xE59}, {0xE81, 0xE82}, {0xE84, 0xE84}, {0xE86, 0xE8A},
    {0xE8C, 0xEA3}, {0xEA5, 0xEA5}, {0xEA7, 0xEB0}, {0xEB2, 0xEB3},
    {0xEBD, 0xEBD}, {0xEC0, 0xEC4}, {0xEC6, 0xEC6}, {0xED0, 0xED9},
    {0xEDC, 0xEDF}, {0xF00, 0xF00}, {0xF20, 0xF33}, {0xF40, 0xF47},
    {0xF49, 0xF6C}, {0xF88, 0xF8C}, {0x1000, 0x102A}, {0x103F, 0x1049},
    {0x1050, 0x1055}, {0x105A, 0x105D}, {0x1061, 0x1061}, {0x1065, 0x1066},
    {0x106E, 0x1070}, {0x1075, 0x1081}, {0x108E, 0x108E}, {0x1090, 0x1099},
    {0x10A0, 0x10C5}, {0x10C7, 0x10C7}, {0x10CD, 0x10CD}, {0x10D0, 0x10FA},
    {0x10FC, 0x1248}, {0x124A, 0x124D}, {0x1250, 0x1256}, {0x1258, 0x1258},
    {0x125A, 0x125D}, {0x1260, 0x1288}, {0x128A, 0x128D}, {0x1290, 0x12B0},
    {0x12B2, 0x12B5}, {0x12B8, 0x12BE}, {0x12C0, 0x12C0}, {0x12C2, 0x12C5},
    {0x12C8, 0x12D6}, {0x12D8, 0x1310}, {0x1312, 0x1315}, {0x1318, 0x135A},
    {0x1369, 0x137C}, {0x1380, 0x138F}, {0x13A0, 0x13F5}, {0x13F8, 0x13FD},
    {0x1401, 0x166C}, {0x166F, 0x167F}, {0x1681, 0x169A}, {0x16A0, 0x16EA},
    {0x16EE, 0x16F8}, {0x1700, 0x170C}, {0x170E, 0x1711}, {0x1720, 0x1731},
    {0x1740, 0x1751}, {0x1760, 0x176C}, {0x176E, 0x1770}, {0x1780, 0x17B3},
    {0x17D7, 0x17D7}, {0x17DC, 0x17DC}, {0x17E0, 0x17E9}, {0x17F0, 0x17F9},
    {0x1810, 0x1819}, {0x1820, 0x1878}, {0x1880, 0x1884}, {0x1887, 0x18A8},
    {0x18AA, 0x18AA}, {0x18B0, 0x18F5}, {0x1900, 0x191E}, {0x1946, 0x196D},
    {0x1970, 0x1974}, {0x1980, 0x19AB}, {0x19B0, 0x19C9}, {0x19D0, 0x19DA},
    {0x1A00, 0x1A16}, {0x1A20, 0x1A54}, {0x1A80, 0x1A89}, {0x1A90, 0x1A99},
    {0x1AA7, 0x1AA7}, {0x1B05, 0x1B33}, {0x1B45, 0x1B4B}, {0x1B50, 0x1B59},
    {0x1B83, 0x1BA0}, {0x1BAE, 0x1BE5}, {0x1C00, 0x1C23}, {0x1C40, 0x1C49},
    {0x1C4D, 0x1C7D}, {0x1C80, 0x1C88}, {0x1C90, 0x1CBA}, {0x1CBD, 0x1CBF},
    {0x1CE9, 0x1CEC}, {0x1CEE, 0x1CF3}, {0x1CF5, 0x1CF6}, {0x1CFA, 0x1CFA},
    {0x1D00, 0x1DBF}, {0x1E00, 0x1F15}, {0x1F18, 0x1F1D}, {0x1F20, 0x1F45},
    {0x1F48, 0x1F4D}, {0x1F50, 0x1F57}, {0x1F59, 0x1F59}, {0x1F5B, 0x1F5B},
    {0x1F5D, 0x1F5D}, {0x1F5F, 0x1F7D}, {0x1F80, 0x1FB4}, {0x1FB6, 0x1FBC},
    {0x1FBE, 0x1FBE}, {0x1FC2, 0x1FC4}, {0x1FC6, 0x1FCC}, {0x1FD0, 0x1FD3},
    {0x1FD6, 0x1FDB}, {0x1FE0, 0x1FEC}, {0x1FF2, 0x1FF4}, {0x1FF6, 0x1FFC},
    {0x2070, 0x2071}, {0x2074, 0x2079}, {0x207F, 0x2089}, {0x2090, 0x209C},
    {0x2102, 0x2102}, {0x2107, 0x2107}, {0x210A, 0x2113}, {0x2115, 0x2115},
    {0x2119, 0x211D}, {0x2124, 0x2124}, {0x2126, 0x2126}, {0x2128, 0x2128},
    {0x212A, 0x212D}, {0x212F, 0x2139}, {0x213C, 0x213F}, {0x2145, 0x2149},
    {0x214E, 0x214E}, {0x2150, 0x2189}, {0x2460, 0x249B}, {0x24EA, 0x24FF},
    {0x2776, 0x2793}, {0x2C00, 0x2C2E}, {0x2C30, 0x2C5E}, {0x2C60, 0x2CE4},
    {0x2CEB, 0x2CEE}, {0x2CF2, 0x2CF3}, {0x2CFD, 0x2CFD}, {0x2D00, 0x2D25},
    {0x2D27, 0x2D27}, {0x2D2D, 0x2D2D}, {0x2D30, 0x2D67}, {0x2D6F, 0x2D6F},
    {0x2D80, 0x2D96}, {0x2DA0, 0x2DA6}, {0x2DA8, 0x2DAE}, {0x2DB0, 0x2DB6},
    {0x2DB8, 0x2DBE}, {0x2DC0, 0x2DC6}, {0x2DC8, 0x2DCE}, {0x2DD0, 0x2DD6},
    {0x2DD8, 0x2DDE}, {0x2E2F, 0x2E2F}, {0x3005, 0x3007}, {0x3021, 0x3029},
    {0x3031, 0x3035}, {0x3038, 0x303C}, {0x3041, 0x3096}, {0x309D, 0x309F},
    {0x30A1, 0x30FA}, {0x30FC, 0x30FF}, {0x3105, 0x312F}, {0x3131, 0x318E},
    {0x3192, 0x3195}, {0x31A0, 0x31BF}, {0x31F0, 0x31FF}, {0x3220, 0x3229},
    {0x3248, 0x324F}, {0x3251, 0x325F}, {0x3280, 0x3289}, {0x32B1, 0x32BF},
    {0x3400, 0x4DBF}, {0x4E00, 0x9FFC}, {0xA000, 0xA48C}, {0xA4D0, 0xA4FD},
    {0xA500, 0xA60C}, {0xA610, 0xA62B}, {0xA640, 0xA66E}, {0xA67F, 0xA69D},
    {0xA6A0, 0xA6EF}, {0xA717, 0xA71F}, {0xA722, 0xA788}, {0xA78B, 0xA7BF},
    {0xA7C2, 0xA7CA}, {0xA7F5, 0xA801}, {0xA803, 0xA805}, {0xA807, 0xA80A},
    {0xA80C, 0xA822}, {0xA830, 0xA835}, {0xA840, 0xA873}, {0xA882, 0xA8B3},
    {0xA8D0, 0xA8D9}, {0xA8F2, 0xA8F7}, {0xA8FB, 0xA8FB}, {0xA8FD, 0xA8FE},
    {0xA900, 0xA925}, {0xA930, 0xA946}, {0xA960, 0xA97C}, {0xA984, 0xA9B2},
    {0xA9CF, 0xA9D9}, {0xA9E0, 0xA9E4}, {0xA9E6, 0xA9FE}, {0xAA00, 0xAA28},
    {0xAA40, 0xAA42}, {0xAA44, 0xAA4B}, {0xAA50, 0xAA59}, {0xAA60, 0xAA76},
    {0xAA7A, 0xAA7A}, {0xAA7E, 0xAAAF}, {0xAAB1, 0xAAB1}, {0xAAB5, 0xAAB6},
    {0xAAB9, 0xAABD}, {0xAAC0, 0xAAC0}, {0xAAC2, 0xAAC2}, {0xAADB, 0xAADD},
    {0xAAE0, 0xAAEA}, {0xAAF2, 0xAAF4}, {0xAB01, 0xAB06}, {0xAB09, 0xAB0E},
    {0xAB11, 0xAB16}, {0xAB20, 0xAB26}, {0xAB28, 0xAB2E}, {0xAB30, 0xAB5A},
    {0xAB5C, 0xAB69}, {0xAB70, 0xABE2}, {0xABF0, 0xABF9}, {0xAC00, 0xD7A3},
    {0xD7B0, 0xD7C6}, {0xD7CB, 0xD7FB}, {0xF900, 0xFA6D}, {0xFA70, 0xFAD9},
    {0xFB00, 0xFB06}, {0xFB13, 0xFB17}, {0xFB1D, 0xFB1D}, {0xFB1F, 0xFB28},
    {0xFB2A, 0xFB36}, {0xFB38, 0xFB3C}, {0xFB3E, 0xFB3E}, {0xFB40, 0xFB41},
    {0xFB43, 0xFB44}, {0xFB46, 0xFBB1}, {0xFBD3, 0xFD3D}, {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7}, {0xFDF0, 0xFDFB}, {0xFE70, 0xFE74}, {0xFE76, 0xFEFC},
    {0xFF10, 0xFF19}, {0xFF21, 0xFF3A}, {0xFF41, 0xFF5A}, {0xFF66, 0xFFBE},
    {0xFFC2, 0xFFC7}, {0xFFCA, 0xFFCF}, {0xFFD2, 0xFFD7}, {0xFFDA, 0xFFDC},
    {0x10000, 0x1000B}, {0x1000D, 0x10026}, {0x10028, 0x1003A}, {0x1003C, 0x1003D},
    {0x1003F, 0x1004D}, {0x10050, 0x1005D}, {0x10080, 0x100FA}, {0x10107, 0x10133},
    {0x10140, 0x10178}, {0x1018A, 0x1018B}, {0x10280, 0x1029C}, {0x102A0, 0x102D0},
    {0x102E1, 0x102FB}, {0x10300, 0x10323}, {0x1032D, 0x1034A}, {0x10350, 0x10375},
    {0x10380, 0x1039D}, {0x103A0, 0x103C3}, {0x103C8, 0x103CF}, {0x103D1, 0x103D5},
    {0x10400, 0x1049D}, {0x104A0, 0x104A9}, {0x104B0, 0x104D3}, {0x104D8, 0x104FB},
    {0x10500, 0x10527}, {0x10530, 0x10563}, {0x10600, 0x10736}, {0x10740, 0x10755},
    {0x10760, 0x10767}, {0x10800, 0x10805}, {0x10808, 0x10808}, {0x1080A, 0x10835},
    {0x10837, 0x10838}, {0x1083C, 0x1083C}, {0x1083F, 0x10855}, {0x10858, 0x10876},
    {0x10879, 0x1089E}, {0x108A7, 0x108AF}, {0x108E0, 0x108F2}, {0x108F4, 0x108F5},
    {0x108FB, 0x1091B}, {0x10920, 0x10939}, {0x10980, 0x109B7}, {0x109BC, 0x109CF},
    {0x109D2, 0x10A00}, {0x10A10, 0x10A13}, {0x10A15, 0x10A17}, {0x10A19, 0x10A35},
    {0x10A40, 0x10A48}, {0x10A60, 0x10A7E}, {0x10A80, 0x10A9F}, {0x10AC0, 0x10AC7},
    {0x10AC9, 0x10AE4}, {0x10AEB, 0x10AEF}, {0x10B00, 0x10B35}, {0x10B40, 0x10B55},
    {0x10B58, 0x10B72}, {0x10B78, 0x10B91}, {0x10BA9, 0x10BAF}, {0x10C00, 0x10C48},
    {0x10C80, 0x10CB2}, {0x10CC0, 0x10CF2}, {0x10CFA, 0x10D23}, {0x10D30, 0x10D39},
    {0x10E60, 0x10E7E}, {0x10E80, 0x10EA9}, {0x10EB0, 0x10EB1}, {0x10F00, 0x10F27},
    {0x10F30, 0x10F45}, {0x10F51, 0x10F54}, {0x10FB0, 0x10FCB}, {0x10FE0, 0x10FF6},
    {0x11003, 0x11037}, {0x11052, 0x1106F}, {0x11083, 0x110AF}, {0x110D0, 0x110E8},
    {0x110F0, 0x110F9}, {0x11103, 0x11126}, {0x11136, 0x1113F}, {0x11144, 0x11144},
    {0x11147, 0x11147}, {0x11150, 0x11172}, {0x11176, 0x11176}, {0x11183, 0x111B2},
    {0x111C1, 0x111C4}, {0x111D0, 0x111DA}, {0x111DC, 0x111DC}, {0x111E1, 0x111F4},
    {0x11200, 0x11211}, {0x11213, 0x1122B}, {0x11280, 0x11286}, {0x11288, 0x11288},
    {0x1128A, 0x1128D}, {0x1128F, 0x1129D}, {0x1129F, 0x112A8}, {0x112B0, 0x112DE},
    {0x112F0, 0x112F9}, {0x11305, 0x1130C}, {0x1130F, 0x11310}, {0x11313, 0x11328},
    {0x1132A, 0x11330}, {0x11332, 0x11333}, {0x11335, 0x11339}, {0x1133D, 0x1133D},
    {0x11350, 0x11350}, {0x1135D, 0x11361}, {0x11400, 0x11434}, {0x11447, 0x1144A},
    {0x11450, 0x11459}, {0x1145F, 0x11461}, {0x11480, 0x114AF}, {0x114C4, 0x114C5},
    {0x114C7, 0x114C7}, {0x114D0, 0x114D9}, {0x11580, 0x115AE}, {0x115D8, 0x115DB},
    {0x11600, 0x1162F}, {0x11644, 0x11644}, {0x11650, 0x11659}, {0x11680, 0x116AA},
    {0x116B8, 0x116B8}, {0x116C0, 0x116C9}, {0x11700, 0x1171A}, {0x11730, 0x1173B},
    {0x11800, 0x1182B}, {0x118A0, 0x118F2}, {0x118FF, 0x11906}, {0x11909, 0x11909},
    {0x1190C, 0x11913}, {0x11915, 0x11916}, {0x11918, 0x1192F}, {0x1193F, 0x1193F},
    {0x11941, 0x11941}, {0x11950, 0x11959}, {0x119A0, 0x119A7}, {0x119AA, 0x119D0},
    {0x119E1, 0x119E1}, {0x119E3, 0x119E3}, {0x11A00, 0x11A00}, {0x11A0B, 0x11A32},
    {0x11A3A, 0x11A3A}, {0x11A50, 0x11A50}, {0x11A5C, 0x11A89}, {0x11A9D, 0x11A9D},
    {0x11AC0, 0x11AF8}, {0x11C00, 0x11C08}, {0x11C0A, 0x11C2E}, {0x11C40, 0x11C40},
    {0x11C50, 0x11C6C}, {0x11C72, 0x11C8F}, {0x11D00, 0x11D06}, {0x11D08, 0x11D09},
    {0x11D0B, 0x11D30}, {0x11D46, 0x11D46}, {0x11D50, 0x11D59}, {0x11D60, 0x11D65},
    {0x11D67, 0x11D68}, {0x11D6A, 0x11D89}, {0x11D98, 0x11D98}, {0x11DA0, 0x11DA9},
    {0x11EE0, 0x11EF2}, {0x11FB0, 0x11FB0}, {0x11FC0, 0x11FD4}, {0x12000, 0x12399},
    {0x12400, 0x1246E}, {0x12480, 0x12543}, {0x13000, 0x1342E}, {0x14400, 0x14646},
    {0x16800, 0x16A38}, {0x16A40, 0x16A5E}, {0x16A60, 0x16A69}, {0x16AD0, 0x16AED},
    {0x16B00, 0x16B2F}, {0x16B40, 0x16B43}, {0x16B50, 0x16B59}, {0x16B5B, 0x16B61},
    {0x16B63, 0x16B77}, {0x16B7D, 0x16B8F}, {0x16E40, 0x16E96}, {0x16F00, 0x16F4A},
    {0x16F50, 0x16F50}, {0x16F93, 0x16F9F}, {0x16FE0, 0x16FE1}, {0x16FE3, 0x16FE3},
    {0x17000, 0x187F7}, {0x18800, 0x18CD5}, {0x18D00, 0x18D08}, {0x1B000, 0x1B11E},
    {0x1B150, 0x1B152}, {0x1B164, 0x1B167}, {0x1B170, 0x1B2FB}, {0x1BC00, 0x1BC6A},
    {0x1BC70, 0x1BC7C}, {0x1BC80, 0x1BC88}, {0x1BC90, 0x1BC99}, {0x1D2E0, 0x1D2F3},
    {0x1D360, 0x1D378}, {0x1D400, 0x1D454}, {0x1D456, 0x1D49C}, {0x1D49E, 0x1D49F},
    {0x1D4A2, 0x1D4A2}, {0x1D4A5, 0x1D4A6}, {0x1D4A9, 0x1D4AC}, {0x1D4AE, 0x1D4B9},
    {0x1D4BB, 0x1D4BB}, {0x1D4BD, 0x1D4C3}, {0x1D4C5, 0x1D505}, {0x1D507, 0x1D50A},
    {0x1D50D, 0x1D514}, {0x1D516, 0x1D51C}, {0x1D51E, 0x1D539}, {0x1D53B, 0x1D53E},
    {0x1D540, 0x1D544}, {0x1D546, 0x1D546}, {0x1D54A, 0x1D550}, {0x1D552, 0x1D6A5},
    {0x1D6A8, 0x1D6C0}, {0x1D6C2, 0x1D6DA}, {0x1D6DC, 0x1D6FA}, {0x1D6FC, 0x1D714},
    {0x1D716, 0x1D734}, {0x1D736, 0x1D74E}, {0x1D750, 0x1D76E}, {0x1D770, 0x1D788},
    {0x1D78A, 0x1D7A8}, {0x1D7AA, 0x1D7C2}, {0x1D7C4, 0x1D7CB}, {0x1D7CE, 0x1D7FF},
    {0x1E100, 0x1E12C}, {0x1E137, 0x1E13D}, {0x1E140, 0x1E149}, {0x1E14E, 0x1E14E},
    {0x1E2C0, 0x1E2EB}, {0x1E2F0, 0x1E2F9}, {0x1E800, 0x1E8C4}, {0x1E8C7, 0x1E8CF},
    {0x1E900, 0x1E943}, {0x1E94B, 0x1E94B}, {0x1E950, 0x1E959}, {0x1EC71, 0x1ECAB},
    {0x1ECAD, 0x1ECAF}, {0x1ECB1, 0x1ECB4}, {0x1ED01, 0x1ED2D}, {0x1ED2F, 0x1ED3D},
    {0x1EE00, 0x1EE03}, {0x1EE05, 0x1EE1F}, {0x1EE21, 0x1EE22}, {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27}, {0x1EE29, 0x1EE32}, {0x1EE34, 0x1EE37}, {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B}, {0x1EE42, 0x1EE42}, {0x1EE47, 0x1EE47}, {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B}, {0x1EE4D, 0x1EE4F}, {0x1EE51, 0x1EE52}, {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57}, {0x1EE59, 0x1EE59}, {0x1EE5B, 0x1EE5B}, {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F}, {0x1EE61, 0x1EE62}, {0x1EE64, 0x1EE64}, {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72}, {0x1EE74, 0x1EE77}, {0x1EE79, 0x1EE7C}, {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89}, {0x1EE8B, 0x1EE9B}, {0x1EEA1, 0x1EEA3}, {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB}, {0x1F100, 0x1F10C}, {0x1FBF0, 0x1FBF9}, {0x20000, 0x2A6DD},
    {0x2A700, 0x2B734}, {0x2B740, 0x2B81D}, {0x2B820, 0x2CEA1}, {0x2CEB0, 0x2EBE0},
    {0x2F800, 0x2FA1D}, {0x30000, 0x3134A},
};

inline constexpr CpRange kWhitespace[] = {
    {0x9, 0xD}, {0x20, 0x20}, {0x85, 0x85}, {0xA0, 0xA0},
    {0x1680, 0x1680}, {0x2000, 0x200A}, {0x2028, 0x2029}, {0x202F, 0x202F},
    {0x205F, 0x205F}, {0x3000, 0x3000},
};

struct CpPair {
  char32_t from;
  char32_t to;
};

inline constexpr CpPair kSimpleLower[] = {
    {0x41, 0x61}, {0x42, 0x62}, {0x43, 0x63}, {0x44, 0x64}, {0x45, 0x65}, {0x46, 0x66},
    {0x47, 0x67}, {0x48, 0x68}, {0x49, 0x69}, {0x4A, 0x6A}, {0x4B, 0x6B}, {0x4C, 0x6C},
    {0x4D, 0x6D}, {0x4E, 0x6E}, {0x4F, 0x6F}, {0x50, 0x70}, {0x51, 0x71}, {0x52, 0x72},
    {0x53, 0x73}, {0x54, 0x74}, {0x55, 0x75}, {0x56, 0x76}, {0x57, 0x77}, {0x58, 0x78},
    {0x59, 0x79}, {0x5A, 0x7A}, {0xC0, 0xE0}, {0xC1, 0xE1}, {0xC2, 0xE2}, {0xC3, 0xE3},
    {0xC4, 0xE4}, {0xC5, 0xE5}, {0xC6, 0xE6}, {0xC7, 0xE7}, {0xC8, 0xE8}, {0xC9, 0xE9},
    {0xCA, 0xEA}, {0xCB, 0xEB}, {0xCC, 0xEC}, {0xCD, 0xED}, {0xCE, 0xEE}, {0xCF, 0xEF},
    {0xD0, 0xF0}, {0xD1, 0xF1}, {0xD2, 0xF2}, {0xD3, 0xF3}, {0xD4, 0xF4}, {0xD5, 0xF5},
    {0xD6, 0xF6}, {0xD8, 0xF8}, {0xD9, 0xF9}, {0xDA, 0xFA}, {0xDB, 0xFB}, {0xDC, 0xFC},
    {0xDD, 0xFD}, {0xDE, 0xFE}, {0x100, 0x101}, {0x102, 0x103}, {0x104, 0x105}, {0x106, 0x107},
    {0x108, 0x109}, {0x10A, 0x10B}, {0x10C, 0x10D}, {0x10E, 0x10F}, {0x110, 0x111}, {0x112, 0x113},
    {0x114, 0x115}, {0x116, 0x117}, {0x118, 0x119}, {0x11A, 0x11B}, {0x11C, 0x11D}, {0x11E, 0x11F},
    {0x120, 0x121}, {0x122, 0x123}, {0x124, 0x125}, {0x126, 0x127}, {0x128, 0x129}, {0x12A, 0x12B},
    {0x12C, 0x12D}, {0x12E, 0x12F}, {0x132, 0x133}, {0x134, 0x135}, {0x136, 0x137}, {0x139, 0x13A},
    {0x13B, 0x13C}, {0x13D, 0x13E}, {0x13F, 0x140}, {0x141, 0x142}, {0x143, 0x144}, {0x145, 0x146},
    {0x147, 0x148}, {0x14A, 0x14B}, {0x14C, 0x14D}, {0x14E, 0x14F}, {0x150, 0x151}, {0x152, 0x153},
    {0x154, 0x155}, {0x156, 0x157}, {0x158, 0x159}, {0x15A, 0x15B}, {0x15C, 0x15D}, {0x15E, 0x15F},
    {0x160, 0x161}, {0x162, 0x163}, {0x164, 0x165}, {0x166, 0x167}, {0x168, 0x169}, {0x16A, 0x16B},
    {0x16C, 0x16D}, {0x16E, 0x16F}, {0x170, 0x171}, {0x172, 0x173}, {0x174, 0x175}, {0x176, 0x177},
    {0x178, 0xFF}, {0x179, 0x17A}, {0x17B, 0x17C}, {0x17D, 0x17E}, {0x181, 0x253}, {0x182, 0x183},
    {0x184, 0x185}, {0x186, 0x254}, {0x187, 0x188}, {0x189, 0x256}, {0x18A, 0x257}, {0x18B, 0x18C},
    {0x18E, 0x1DD}, {0x18F, 0x259}, {0x190, 0x25B}, {0x191, 0x192}, {0x193, 0x260}, {0x194, 0x263},
    {0x196, 0x269}, {0x197, 0x268}, {0x198, 0x199}, {0x19C, 0x26F}, {0x19D, 0x272}, {0x19F, 0x275},
    {0x1A0, 0x1A1}, {0x1A2, 0x1A3}, {0x1A4, 0x1A5}, {0x1A6, 0x280}, {0x1A7, 0x1A8}, {0x1A9, 0x283},
    {0x1AC, 0x1AD}, {0x1AE, 0x288}, {0x1AF, 0x1B0}, {0x1B1, 0x28A}, {0x1B2, 0x28B}, {0x1B3, 0x1B4},
    {0x1B5, 0x1B6}, {0x1B7, 0x292}, {0x1B8, 0x1B9}, {0x1BC, 0x1BD}, {0x1C4, 0x1C6}, {0x1C5, 0x1C6},
    {0x1C7, 0x1C9}, {0x1C8, 0x1C9}, {0x1CA, 0x1CC}, {0x1CB, 0x1CC}, {0x1CD, 0x1CE}, {0x1CF, 0x1D0},
    {0x1D1, 0x1D2}, {0x1D3, 0x1D4}, {0x1D5, 0x1D6}, {0x1D7, 0x1D8}, {0x1D9, 0x1DA}, {0x1DB, 0x1DC},
    {0x1DE, 0x1DF}, {0x1E0, 0x1E1}, {0x1E2, 0x1E3}, {0x1E4, 0x1E5}, {0x1E6, 0x1E7}, {0x1E8, 0x1E9},
    {0x1EA, 0x1EB}, {0x1EC, 0x1ED}, {0x1EE, 0x1EF}, {0x1F1, 0x1F3}, {0x1F2, 0x1F3}, {0x1F4, 0x1F5},
    {0x1F6, 0x195}, {0x1F7, 0x1BF}, {0x1F8, 0x1F9}, {0x1FA, 0x1FB}, {0x1FC, 0x1FD}, {0x1FE, 0x1FF},
    {0x200, 0x201}, {0x202, 0x203}, {0x204, 0x205}, {0x206, 0x207}, {0x208, 0x209}, {0x20A, 0x20B},
    {0x20C, 0x20D}, {0x20E, 0x20F}, {0x210, 0x211}, {0x212, 0x213}, {0x214, 0x215}, {0x216, 0x217},
    {0x218, 0x219}, {0x21A, 0x21B}, {0x21C, 0x21D}, {0x21E, 0x21F}, {0x220, 0x19E}, {0x222, 0x223},
    {0x224, 0x225}, {0x226, 0x227}, {0x228, 0x229}, {0x22A, 0x22B}, {0x22C, 0x22D}, {0x22E, 0x22F},
    {0x230, 0x231}, {0x232, 0x233}, {0x23A, 0x2C65}, {0x23B, 0x23C}, {0x23D, 0x19A}, {0x23E, 0x2C66},
    {0x241, 0x242}, {0x243, 0x180}, {0x244, 0x289}, {0x245, 0x28C}, {0x246, 0x247}, {0x248, 0x249},
    {0x24A, 0x24B}, {0x24C, 0x24D}, {0x24E, 0x24F}, {0x370, 0x371}, {0x372, 0x373}, {0x376, 0x377},
    {0x37F, 0x3F3}, {0x386, 0x3AC}, {0x388, 0x3AD}, {0x389, 0x3AE}, {0x38A, 0x3AF}, {0x38C, 0x3CC},
    {0x38E, 0x3CD}, {0x38F, 0x3CE}, {0x391, 0x3B1}, {0x392, 0x3B2}, {0x393, 0x3B3}, {0x394, 0x3B4},
    {0x395, 0x3B5}, {0x396, 0x3B6}, {0x397, 0x3B7}, {0x398, 0x3B8}, {0x399, 0x3B9}, {0x39A, 0x3BA},
    {0x39B, 0x3BB}, {0x39C, 0x3BC}, {0x39D, 0x3BD}, {0x39E, 0x3BE}, {0x39F, 0x3BF}, {0x3A0, 0x3C0},
    {0x3A1, 0x3C1}, {0x3A3, 0x3C3}, {0x3A4, 0x3C4}, {0x3A5, 0x3C5}, {0x3A6, 0x3C6}, {0x3A7, 0x3C7},
    {0x3A8, 0x3C8}, {0x3A9, 0x3C9}, {0x3AA, 0x3CA}, {0x3AB, 0x3CB}, {0x3CF, 0x3D7}, {0x3D8, 0x3D9},
    {0x3DA, 0x3DB}, {0x3DC, 0x3DD}, {0x3DE, 0x3DF}, {0x3E0, 0x3E1}, {0x3E2, 0x3E3}, {0x3E4, 0x3E5},
    {0x3E6, 0x3E7}, {0x3E8, 0x3E9}, {0x3EA, 0x3EB}, {0x3EC, 0x3ED}, {0x3EE, 0x3EF}, {0x3F4, 0x3B8},
    {0x3F7, 0x3F8}, {0x3F9, 0x3F2}, {0x3FA, 0x3FB}, {0x3FD, 0x37B}, {0x3FE, 0x37C}, {0x3FF, 0x37D},
    {0x400, 0x450}, {0x401, 0x451}, {0x402, 0x452}, {0x403, 0x453}, {0x404, 0x454}, {0x405, 0x455},
    {0x406, 0x456}, {0x407, 0x457}, {0x408, 0x458}, {0x409, 0x459}, {0x40A, 0x45A}, {0x40B, 0x45B},
    {0x40C, 0x45C}, {0x40D, 0x45D}, {0x40E, 0x45E}, {0x40F, 0x45F}, {0x410, 0x430}, {0x411, 0x431},
    {0x412, 0x432}, {0x413, 0x433}, {0x414, 0x434}, {0x415, 0x435}, {0x416, 0x436}, {0x417, 0x437},
    {0x418, 0x438}, {0x419, 0x439}, {0x41A, 0x43A}, {0x41B, 0x43B}, {0x41C, 0x43C}, {0x41D, 0x43D},
    {0x41E, 0x43E}, {0x41F, 0x43F}, {0x420, 0x440}, {0x421, 0x441}, {0x422, 0x442}, {0x423, 0x443},
    {0x424, 0x444}, {0x425, 0x445}, {0x426, 0x446}, {0x427, 0x447}, {0x428, 0x448}, {0x429, 0x449},
    {0x42A, 0x44A}, {0x42B, 0x44B}, {0x42C, 0x44C}, {0x42D, 0x44D}, {0x42E, 0x44E}, {0x42F, 0x44F},
    {0x460, 0x461}, {0x462, 0x463}, {0x464, 0x465}, {0x466, 0x467}, {0x468, 0x469}, {0x46A, 0x46B},
    {0x46C, 0x46D}, {0x46E, 0x46F}, {0x470, 0x471}, {0x472, 0x473}, {0x474, 0x475}, {0x476, 0x477},
    {0x478, 0x479}, {0x47A, 0x47B}, {0x47C, 0x47D}, {0x47E, 0x47F}, {0x480, 0x481}, {0x48A, 0x48B},
    {0x48C, 0x48D}, {0x48E, 0x48F}, {0x490, 0x491}, {0x492, 0x493}, {0x494, 0x495}, {0x496, 0x497},
    {0x498, 0x499}, {0x49A, 0x49B}, {0x49C, 0x49D}, {0x49E, 0x49F}, {0x4A0, 0x4A1}, {0x4A2, 0x4A3},
    {0x4A4, 0x4A5}, {0x4A6, 0x4A7}, {0x4A8, 0x4A9}, {0x4AA, 0x4AB}, {0x4AC, 0x4AD}, {0x4AE, 0x4AF},
    {0x4B0, 0x4B1}, {0x4B2, 0x4B3}, {0x4B4, 0x4B5}, {0x4B6, 0x4B7}, {0x4B8, 0x4B9}, {0x4BA, 0x4BB},
    {0x4BC, 0x4BD}, {0x4BE, 0x4BF}, {0x4C0, 0x4CF}, {0x4C1, 0x4C2}, {0x4C3, 0x4C4}, {0x4C5, 0x4C6},
    {0x4C7, 0x4C8}, {0x4C9, 0x4CA}, {0x4CB, 0x4CC}, {0x4CD, 0x4CE}, {0x4D0, 0x4D1}, {0x4D2, 0x4D3},
    {0x4D4, 0x4D5}, {0x4D6, 0x4D7}, {0x4D8, 0x4D9}, {0x4DA, 0x4DB}, {0x4DC, 0x4DD}, {0x4DE, 0x4DF},
    {0x4E0, 0x4E1}, {0x4E2, 0x4E3}, {0x4E4, 0x4E5}, {0x4E6, 0x4E7}, {0x4E8, 0x4E9}, {0x4EA, 0x4EB},
    {0x4EC, 0x4ED}, {0x4EE, 0x4EF}, {0x4F0, 0x4F1}, {0x4F2, 0x4F3}, {0x4F4, 0x4F5}, {0x4F6, 0x4F7},
    {0x4F8, 0x4F9}, {0x4FA, 0x4FB}, {0x4FC, 0x4FD}, {0x4FE, 0x4FF}, {0x500, 0x501}, {0x502, 0x503},
    {0x504, 0x505}, {0x506, 0x507}, {0x508, 0x509}, {0x50A, 0x50B}, {0x50C, 0x50D}, {0x50E, 0x50F},
    {0x510, 0x511}, {0x512, 0x513}, {0x514, 0x515}, {0x516, 0x517}, {0x518, 0x519}, {0x51A, 0x51B},
    {0x51C, 0x51D}, {0x51E, 0x51F}, {0x520, 0x521}, {0x522, 0x523}, {0x524, 0x525}, {0x526, 0x527},
    {0x528, 0x529}, {0x52A, 0x52B}, {0x52C, 0x52D}, {0x52E, 0x52F}, {0x531, 0x561}, {0x532, 0x562},
    {0x533, 0x563}, {0x534, 0x564}, {0x535, 0x565}, {0x536, 0x566}, {0x537, 0x567}, {0x538, 0x568},
    {0x539, 0x569}, {0x53A, 0x56A}, {0x53B, 0x56B}, {0x53C, 0x56C}, {0x53D, 0x56D}, {0x53E, 0x56E},
    {0x53F, 0x56F}, {0x540, 0x570}, {0x541, 0x571}, {0x542, 0x572}, {0x543, 0x573}, {0x544, 0x574},
    {0x545, 0x575}, {0x546, 0x576}, {0x547, 0x577}, {0x548, 0x578}, {0x549, 0x579}, {0x54A, 0x57A},
    {0x54B, 0x57B}, {0x54C, 0x57C}, {0x54D, 0x57D}, {0x54E, 0x57E}, {0x54F, 0x57F}, {0x550, 0x580},
    {0x551, 0x581}, {0x552, 0x582}, {0x553, 0x583}, {0x554, 0x584}, {0x555, 0x585}, {0x556, 0x586},
    {0x10A0, 0x2D00}, {0x10A1, 0x2D01}, {0x10A2, 0x2D02}, {0x10A3, 0x2D03}, {0x10A4, 0x2D04}, {0x10A5, 0x2D05},
    {0x10A6, 0x2D06}, {0x10A7, 0x2D07}, {0x10A8, 0x2D08}, {0x10A9, 0x2D09}, {0x10AA, 0x2D0A}, {0x10AB, 0x2D0B},
    {0x10AC, 0x2D0C}, {0x10AD, 0x2D0D}, {0x10AE, 0x2D0E}, {0x10AF, 0x2D0F}, {0x10B0, 0x2D10}, {0x10B1, 0x2D11},
    {0x10B2, 0x2D12}, {0x10B3, 0x2D13}, {0x10B4, 0x2D14}, {0x10B5, 0x2D15}, {0x10B6, 0x2D16}, {0x10B7, 0x2D17},
    {0x10B8, 0x2D18}, {0x10B9, 0x2D19}, {0x10BA, 0x2D1A}, {0x10BB, 0x2D1B}, {0x10BC, 0x2D1C}, {0x10BD, 0x2D1D},
    {0x10BE, 0x2D1E}, {0x10BF, 0x2D1F}, {0x10C0, 0x2D20}, {0x10C1, 0x2D21}, {0x10C2, 0x2D22}, {0x10C3, 0x2D23},
    {0x10C4, 0x2D24}, {0x10C5, 0x2D25}, {0x10C7, 0x2D27}, {0x10CD, 0x2D2D}, {0x13A0, 0xAB70}, {0x13A1, 0xAB71},
    {0x13A2, 0xAB72}, {0x13A3, 0xAB73}, {0x13A4, 0xAB74}, {0x13A5, 0xAB75}, {0x13A6, 0xAB76}, {0x13A7, 0xAB77},
    {0x13A8, 0xAB78}, {0x13A9, 0xAB79}, {0x13AA, 0xAB7A}, {0x13AB, 0xAB7B}, {0x13AC, 0xAB7C}, {0x13AD, 0xAB7D},
    {0x13AE, 0xAB7E}, {0x13AF, 0xAB7F}, {0x13B0, 0xAB80}, {0x13B1, 0xAB81}, {0x13B2, 0xAB82}, {0x13B3, 0xAB83},
    {0x13B4, 0xAB84}, {0x13B5, 0xAB85}, {0x13B6, 0xAB86}, {0x13B7, 0xAB87}, {0x13B8, 0xAB88}, {0x13B9, 0xAB89},
    {0x13BA, 0xAB8A}, {0x13BB, 0xAB8B}, {0x13BC, 0xAB8C}, {0x13BD, 0xAB8D}, {0x13BE, 0xAB8E}, {0x13BF, 0xAB8F},
    {0x13C0, 0xAB90}, {0x13C1, 0xAB91}, {0x13C2, 0xAB92}, {0x13C3, 0xAB93}, {0x13C4, 0xAB94}, {0x13C5, 0xAB95},
    {0x13C6, 0xAB96}, {0x13C7, 0xAB97}, {0x13C8, 0xAB98}, {0x13C9, 0xAB99}, {0x13CA, 0xAB9A}, {0x13CB, 0xAB9B},
    {0x13CC, 0xAB9C}, {0x13CD, 0xAB9D}, {0x13CE, 0xAB9E}, {0x13CF, 0xAB9F}, {0x13D0, 0xABA0}, {0x13D1, 0xABA1},
    {0x13D2, 0xABA2}, {0x13D3, 0xABA3}, {0x13D4, 0xABA4}, {0x13D5, 0xABA5}, {0x13D6, 0xABA6}, {0x13D7, 0xABA7},
    {0x13D8, 0xABA8}, {0x13D9, 0xABA9}, {0x13DA, 0xABAA}, {0x13DB, 0xABAB}, {0x13DC, 0xABAC}, {0x13DD, 0xABAD},
    {0x13DE, 0xABAE}, {0x13DF, 0xABAF}, {0x13E0, 0xABB0}, {0x13E1, 0xABB1}, {0x13E2, 0xABB2}, {0x13E3, 0xABB3},
    {0x13E4, 0xABB4}, {0x13E5, 0xABB5}, {0x13E6, 0xABB6}, {0x13E7, 0xABB7}, {0x13E8, 0xABB8}, {0x13E9, 0xABB9},
    {0x13EA, 0xABBA}, {0x13EB, 0xABBB}, {0x13EC, 0xABBC}, {0x13ED, 0xABBD}, {0x13EE, 0xABBE}, {0x13EF, 0xABBF},
    {0x13F0, 0x13F8}, {0x13F1, 0x13F9}, {0x13F2, 0x13FA}, {0x13F3, 0x13FB}, {0x13F4, 0x13FC}, {0x13F5, 0x13FD},
    {0x1C90, 0x10D0}, {0x1C91, 0x10D1}, {0x1C92, 0x10D2}, {0x1C93, 0x10D3}, {0x1C94, 0x10D4}, {0x1C95, 0x10D5},
    {0x1C96, 0x10D6}, {0x1C97, 0x10D7}, {0x1C98, 0x10D8}, {0x1C99, 0x10D9}, {0x1C9A, 0x10DA}, {0x1C9B, 0x10DB},
    {0x1C9C, 0x10DC}, {0x1C9D, 0x10DD}, {0x1C9E, 0x10DE}, {0x1C9F, 0x10DF}, {0x1CA0, 0x10E0}, {0x1CA1, 0x10E1},
    {0x1CA2, 0x10E2}, {0x1CA3, 0x10E3}, {0x1CA4, 0x10E4}, {0x1CA5, 0x10E5}, {0x1CA6, 0x10E6}, {0x1CA7, 0x10E7},
    {0x1CA8, 0x10E8}, {0x1CA9, 0x10E9}, {0x1CAA, 0x10EA}, {0x1CAB, 0x10EB}, {0x1CAC, 0x10EC}, {0x1CAD, 0x10ED},
    {0x1CAE, 0x10EE}, {0x1CAF, 0x10EF}, {0x1CB0, 0x10F0}, {0x1CB1, 0x10F1}, {0x1CB2, 0x10F2}, {0x1CB3, 0x10F3},
    {0x1CB4, 0x10F4}, {0x1CB5, 0x10F5}, {0x1CB6, 0x10F6}, {0x1CB7, 0x10F7}, {0x1CB8, 0x10F8}, {0x1CB9, 0x10F9},
    {0x1CBA, 0x10FA}, {0x1CBD, 0x10FD}, {0x1CBE, 0x10FE}, {0x1CBF, 0x10FF}, {0x1E00, 0x1E01}, {0x1E02, 0x1E03},
    {0x1E04, 0x1E05}, {0x1E06, 0x1E07}, {0x1E08, 0x1E09}, {0x1E0A, 0x1E0B}, {0x1E0C, 0x1E0D}, {0x1E0E, 0x1E0F},
    {0x1E10, 0x1E11}, {0x1E12, 0x1E13}, {0x1E14, 0x1E15}, {0x1E16, 0x1E17}, {0x1E18, 0x1E19}, {0x1E1A, 0x1E1B},
    {0x1E1C, 0x1E1D}, {0x1E1E, 0x1E1F}, {0x1E20, 0x1E21}, {0x1E22, 0x1E23}, {0x1E24, 0x1E25}, {0x1E26, 0x1E27},
    {0x1E28, 0x1E29}, {0x1E2A, 0x1E2B}, {0x1E2C, 0x1E2D}, {0x1E2E, 0x1E2F}, {0x1E30, 0x1E31}, {0x1E32, 0x1E33},
    {0x1E34, 0x1E35}, {0x1E36, 0x1E37}, {0x1E38, 0x1E39}, {0x1E3A, 0x1E3B}, {0x1E3C, 0x1E3D}, {0x1E3E, 0x1E3F},
    {0x1E40, 0x1E41}, {0x1E42, 0x1E43}, {0x1E44, 0x1E45}, {0x1E46, 0x1E47}, {0x1E48, 0x1E49}, {0x1E4A, 0x1E4B},
    {0x1E4C, 0x1E4D}, {0x1E4E, 0x1E4F}, {0x1E50, 0x1E51}, {0x1E52, 0x1E53}, {0x1E54, 0x1E55}, {0x1E56, 0x1E57},
    {0x1E58, 0x1E59}, {0x1E5A, 0x1E5B}, {0x1E5C, 0x1E5D}, {0x1E5E, 0x1E5F}, {0x1E60, 0x1E61}, {0x1E62, 0x1E63},
    {0x1E64, 0x1E65}, {0x1E66, 0x1E67}, {0x1E68, 0x1E69}, {0x1E6A, 0x1E6B}, {0x1E6C, 0x1E6D}, {0x1E6E, 0x1E6F},
    {0x1E70, 0x1E71}, {0x1E72, 0x1E73}, {0x1E74, 0x1E75}, {0x1E76, 0x1E77}, {0x1E78, 0x1E79}, {0x1E7A, 0x1E7B},
    {0x1E7C, 0x1E7D}, {0x1E7E, 0x1E7F}, {0x1E80, 0x1E81}, {0x1E82, 0x1E83}, {0x1E84, 0x1E85}, {0x1E86, 0x1E87},
    {0x1E88, 0x1E89}, {0x1E8A, 0x1E8B}, {0x1E8C, 0x1E8D}, {0x1E8E, 0x1E8F}, {0x1E90, 0x1E91}, {0x1E92, 0x1E93},
    {0x1E94, 0x1E95}, {0x1E9E, 0xDF}, {0x1EA0, 0x1EA1}, {0x1EA2, 0x1EA3}, {0x1EA4, 0x1EA5}, {0x1EA6, 0x1EA7},
    {0x1EA8, 0x1EA9}, {0x1EAA, 0x1EAB}, {0x1EAC, 0x1EAD}, {0x1EAE, 0x1EAF}, {0x1EB0, 0x1EB1}, {0x1EB2, 0x1EB3},
    {0x1EB4, 0x1EB5}, {0x1EB6, 0x1EB7}, {0x1EB8, 0x1EB9}, {0x1EBA, 0x1EBB}, {0x1EBC, 0x1EBD}, {0x1EBE, 0x1EBF},
    {0x1EC0, 0x1EC1}, {0x1EC2, 0x1EC3}, {0x1EC4, 0x1EC5}, {0x1EC6, 0x1EC7}, {0x1EC8, 0x1EC9}, {0x1ECA, 0x1ECB},
    {0x1ECC, 0x1ECD}, {0x1ECE, 0x1ECF}, {0x1ED0, 0x1ED1}, {0x1ED2, 0x1ED3}, {0x1ED4, 0x1ED5}, {0x1ED6, 0x1ED7},
    {0x1ED8, 0x1ED9}, {0x1EDA, 0x1EDB}, {0x1EDC, 0x1EDD}, {0x1EDE, 0x1EDF}, {0x1EE0, 0x1EE1}, {0x1EE2, 0x1EE3},
    {0x1EE4, 0x1EE5}, {0x1EE6, 0x1EE7}, {0x1EE8, 0x1EE9}, {0x1EEA, 0x1EEB}, {0x1EEC, 0x1EED}, {0x1EEE, 0x1EEF},
    {0x1EF0, 0x1EF1}, {0x1EF2, 0x1EF3}, {0x1EF4, 0x1EF5}, {0x1EF6, 0x1EF7}, {0x1EF8, 0x1EF9}, {0x1EFA, 0x1EFB},
    {0x1EFC, 0x1EFD}, {0x1EFE, 0x1EFF}, {0x1F08, 0x1F00}, {0x1F09, 0x1F01}, {0x1F0A, 0x1F02}, {0x1F0B, 0x1F03},
    {0x1F0C, 0x1F04}, {0x1F0D, 0x1F05}, {0x1F0E, 0x1F06}, {0x1F0F, 0x1F07}, {0x1F18, 0x1F10}, {0x1F19, 0x1F11},
    {0x1F1A, 0x1F12}, {0x1F1B, 0x1F13}, {0x1F1C, 0x1F14}, {0x1F1D, 0x1F15}, {0x1F28, 0x1F20}, {0x1F29, 0x1F21},
    {0x1F2A, 0x1F22}, {0x1F2B, 0x1F23}, {0x1F2C, 0x1F24}, {0x1F2D, 0x1F25}, {0x1F2E, 0x1F26}, {0x1F2F, 0x1F27},
    {0x1F38, 0x1F30}, {0x1F39, 0x1F31}, {0x1F3A, 0x1F32}, {0x1F3B, 0x1F33}, {0x1F3C, 0x1F34}, {0x1F3D, 0x1F35},
    {0x1F3E, 0x1F36}, {0x1F3F, 0x1F37}, {0x1F48, 0x1F40}, {0x1F49, 0x1F41}, {0x1F4A, 0x1F42}, {0x1F4B, 0x1F43},
    {0x1F4C, 0x1F44}, {0x1F4D, 0x1F45}, {0x1F59, 0x1F51}, {0x1F5B, 0x1F53}, {0x1F5D, 0x1F55}, {0x1F5F, 0x1F57},
    {0x1F68, 0x1F60}, {0x1F69, 0x1F61}, {0x1F6A, 0x1F62}, {0x1F6B, 0x1F63}, {0x1F6C, 0x1F64}, {0x1F6D, 0x1F65},
    {0x1F6E, 0x1F66}, {0x1F6F, 0x1F67}, {0x1F88, 0x1F80}, {0x1F89, 0x1F81}, {0x1F8A, 0x1F82}, {0x1F8B, 0x1F83},
    {0x1F8C, 0x1F84}, {0x1F8D, 0x1F85}, {0x1F8E, 0x1F86}, {0x1F8F, 0x1F87}, {0x1F98, 0x1F90}, {0x1F99, 0x1F91},
    {0x1F9A, 0x1F92}, {0x1F9B, 0x1F93}, {0x1F9C, 0x1F94}, {0x1F9D, 0x1F95}, {0x1F9E, 0x1F96}, {0x1F9F, 0x1F97},
    {0x1FA8, 0x1FA0}, {0x1FA9, 0x1FA1}, {0x1FAA, 0x1FA2}, {0x1FAB, 0x1FA3}, {0x1FAC, 0x1FA4}, {0x1FAD, 0x1FA5},
    {0x1FAE, 0x1FA6}, {0x1FAF, 0x1FA7}, {0x1FB8, 0x1FB0}, {0x1FB9, 0x1FB1}, {0x1FBA, 0x1F70}, {0x1FBB, 0x1F71},
    {0x1FBC, 0x1FB3}, {0x1FC8, 0x1F72}, {0x1FC9, 0x1F73}, {0x1FCA, 0x1F74}, {0x1FCB, 0x1F75}, {0x1FCC, 0x1FC3},
    {0x1FD8, 0x1FD0}, {0x1FD9, 0x1FD1}, {0x1FDA, 0x1F76}, {0x1FDB, 0x1F77}, {0x1FE8, 0x1FE0}, {0x1FE9, 0x1FE1},
    {0x1FEA, 0x1F7A}, {0x1FEB, 0x1F7B}, {0x1FEC, 0x1FE5}, {0x1FF8, 0x1F78}, {0x1FF9, 0x1F79}, {0x1FFA, 0x1F7C},
    {0x1FFB, 0x1F7D}, {0x1FFC, 0x1FF3}, {0x2126, 0x3C9}, {0x212A, 0x6B}, {0x212B, 0xE5}, {0x2132, 0x214E},
    {0x2160, 0x2170}, {0x2161, 0x2171}, {0x2162, 0x2172}, {0x2163, 0x2173}, {0x2164, 0x2174}, {0x2165, 0x2175},
    {0x2166, 0x2176}, {0x2167, 0x2177}, {0x2168, 0x2178}, {0x2169, 0x2179}, {0x216A, 0x217A}, {0x216B, 0x217B},
    {0x216C, 0x217C}, {0x216D, 0x217D}, {0x216E, 0x217E}, {0x216F, 0x217F}, {0x2183, 0x2184}, {0x24B6, 0x24D0},
    {0x24B7, 0x24D1}, {0x24B8, 0x24D2}, {0x24B9, 0x24D3}, {0x24BA, 0x24D4}, {0x24BB, 0x24D5}, {0x24BC, 0x24D6},
    {0x24BD, 0x24D7}, {0x24BE, 0x24D8}, {0x24BF, 0x24D9}, {0x24C0, 0x24DA}, {0x24C1, 0x24DB}, {0x24C2, 0x24DC},
    {0x24C3, 0x24DD}, {0x24C4, 0x24DE}, {0x24C5, 0x24DF}, {0x24C6, 0x24E0}, {0x24C7, 0x24E1}, {0x24C8, 0x24E2},
    {0x24C9, 0x24E3}, {0x24CA, 0x24E4}, {0x24CB, 0x24E5}, {0x24CC, 0x24E6}, {0x24CD, 0x24E7}, {0x24CE, 0x24E8},
    {0x24CF, 0x24E9}, {0x2C00, 0x2C30}, {0x2C01, 0x2C31}, {0x2C02, 0x2C32}, {0x2C03, 0x2C33}, {0x2C04, 0x2C34},
    {0x2C05, 0x2C35}, {0x2C06, 0x2C36}, {0x2C07, 0x2C37}, {0x2C08, 0x2C38}, {0x2C09, 0x2C39}, {0x2C0A, 0x2C3A},
    {0x2C0B, 0x2C3B}, {0x2C0C, 0x2C3C}, {0x2C0D, 0x2C3D}, {0x2C0E, 0x2C3E}, {0x2C0F, 0x2C3F}, {0x2C10, 0x2C40},
    {0x2C11, 0x2C41}, {0x2C12, 0x2C42}, {0x2C13, 0x2C43}, {0x2C14, 0x2C44}, {0x2C15, 0x2C45}, {0x2C16, 0x2C46},
    {0x2C17, 0x2C47}, {0x2C18, 0x2C48}, {0x2C19, 0x2C49}, {0x2C1A, 0x2C4A}, {0x2C1B, 0x2C4B}, {0x2C1C, 0x2C4C},
    {0x2C1D, 0x2C4D}, {0x2C1E, 0x2C4E}, {0x2C1F, 0x2C4F}, {0x2C20, 0x2C50}, {0x2C21, 0x2C51}, {0x2C22, 0x2C52},
    {0x2C23, 0x2C53}, {0x2C24, 0x2C54}, {0x2C25, 0x2C55}, {0x2C26, 0x2C56}, {0x2C27, 0x2C57}, {0x2C28, 0x2C58},
    {0x2C29, 0x2C59}, {0x2C2A, 0x2C5A}, {0x2C2B, 0x2C5B}, {0x2C2C, 0x2C5C}, {0x2C2D, 0x2C5D}, {0x2C2E, 0x2C5E},
    {0x2C60, 0x2C61}, {0x2C62, 0x26B}, {0x2C63, 0x1D7D}, {0x2C64, 0x27D}, {0x2C67, 0x2C68}, {0x2C69, 0x2C6A},
    {0x2C6B, 0x2C6C}, {0x2C6D, 0x251}, {0x2C6E, 0x271}, {0x2C6F, 0x250}, {0x2C70, 0x252}, {0x2C72, 0x2C73},
    {0x2C75, 0x2C76}, {0x2C7E, 0x23F}, {0x2C7F, 0x240}, {0x2C80, 0x2C81}, {0x2C82, 0x2C83}, {0x2C84, 0x2C85},
    {0x2C86, 0x2C87}, {0x2C88, 0x2C89}, {0x2C8A, 0x2C8B}, {0x2C8C, 0x2C8D}, {0x2C8E, 0x2C8F}, {0x2C90, 0x2C91},
    {0x2C92, 0x2C93}, {0x2C94, 0x2C95}, {0x2C96, 0x2C97}, {0x2C98, 0x2C99}, {0x2C9A, 0x2C9B}, {0x2C9C, 0x2C9D},
    {0x2C9E, 0x2C9F}, {0x2CA0, 0x2CA1}, {0x2CA2, 0x2CA3}, {0x2CA4, 0x2CA5}, {0x2CA6, 0x2CA7}, {0x2CA8, 0x2CA9},
    {0x2CAA, 0x2CAB}, {0x2CAC, 0x2CAD}, {0x2CAE, 0x2CAF}, {0x2CB0, 0x2CB1}, {0x2CB2, 0x2CB3}, {0x2CB4, 0x2CB5},
    {0x2CB6, 0x2CB7}, {0x2CB8, 0x2CB9}, {0x2CBA, 0x2CBB}, {0x2CBC, 0x2CBD}, {0x2CBE, 0x2CBF}, {0x2CC0, 0x2CC1},
    {0x2CC2, 0x2CC3}, {0x2CC4, 0x2CC5}, {0x2CC6, 0x2CC7}, {0x2CC8, 0x2CC9}, {0x2CCA, 0x2CCB}, {0x2CCC, 0x2CCD},
    {0x2CCE, 0x2CCF}, {0x2CD0, 0x2CD1}, {0x2CD2, 0x2CD3}, {0x2CD4, 0x2CD5}, {0x2CD6, 0x2CD7}, {0x2CD8, 0x2CD9},
    {0x2CDA, 0x2CDB}, {0x2CDC, 0x2CDD}, {0x2CDE, 0x2CDF}, {0x2CE0, 0x2CE1}, {0x2CE2, 0x2CE3}, {0x2CEB, 0x2CEC},
    {0x2CED, 0x2CEE}, {0x2CF2, 0x2CF3}, {0xA640, 0xA641}, {0xA642, 0xA643}, {0xA644, 0xA645}, {0xA646, 0xA647},
    {0xA648, 0xA649}, {0xA64A, 0xA64B}, {0xA64C, 0xA64D}, {0xA64E, 0xA64F}, {0xA650, 0xA651}, {0xA652, 0xA653},
    {0xA654, 0xA655}, {0xA656, 0xA657}, {0xA658, 0xA659}, {0xA65A, 0xA65B}, {0xA65C, 0xA65D}, {0xA65E, 0xA65F},
    {0xA660, 0xA661}, {0xA662, 0xA663}, {0xA664, 0xA665}, {0xA666, 0xA667}, {0xA668, 0xA669}, {0xA66A, 0xA66B},
    {0xA66C, 0xA66D}, {0xA680, 0xA681}, {0xA682, 0xA683}, {0xA684, 0xA685}, {0xA686, 0xA687}, {0xA688, 0xA689},
    {0xA68A, 0xA68B}, {0xA68C, 0xA68D}, {0xA68E, 0xA68F}, {0xA690, 0xA691}, {0xA692, 0xA693}, {0xA694, 0xA695},
    {0xA696, 0xA697}, {0xA698, 0xA699}, {0xA69A, 0xA69B}, {0xA722, 0xA723}, {0xA724, 0xA725}, {0xA726, 0xA727},
    {0xA728, 0xA729}, {0xA72A, 0xA72B}, {0xA72C, 0xA72D}, {0xA72E, 0xA72F}, {0xA732, 0xA733}, {0xA734, 0xA735},
    {0xA736, 0xA737}, {0xA738, 0xA739}, {0xA73A, 0xA73B}, {0xA73C, 0xA73D}, {0xA73E, 0xA73F}, {0xA740, 0xA741},
    {0xA742, 0xA743}, {0xA744, 0xA745}, {0xA746, 0xA747}, {0xA748, 0xA749}, {0xA74A, 0xA74B}, {0xA74C, 0xA74D},
    {0xA74E, 0xA74F}, {0xA750, 0xA751}, {0xA752, 0xA753}, {0xA754, 0xA755}, {0xA756, 0xA757}, {0xA758, 0xA759},
    {0xA75A, 0xA75B}, {0xA75C, 0xA75D}, {0xA75E, 0xA75F}, {0xA760, 0xA761}, {0xA762, 0xA763}, {0xA764, 0xA765},
    {0xA766, 0xA767}, {0xA768, 0xA769}, {0xA76A, 0xA76B}, {0xA76C, 0xA76D}, {0xA76E, 0xA76F}, {0xA779, 0xA77A},
    {0xA77B, 0xA77C}, {0xA77D, 0x1D79}, {0xA77E, 0xA77F}, {0xA780, 0xA781}, {0xA782, 0xA783}, {0xA784, 0xA785},
    {0xA786, 0xA787}, {0xA78B, 0xA78C}, {0xA78D, 0x265}, {0xA790, 0xA791}, {0xA792, 0xA793}, {0xA796, 0xA797},
    {0xA798, 0xA799}, {0xA79A, 0xA79B}, {0xA79C, 0xA79D}, {0xA79E, 0xA79F}, {0xA7A0, 0xA7A1}, {0xA7A2, 0xA7A3},
    {0xA7A4, 0xA7A5}, {0xA7A6, 0xA7A7}, {0xA7A8, 0xA7A9}, {0xA7AA, 0x266}, {0xA7AB, 0x25C}, {0xA7AC, 0x261},
    {0xA7AD, 0x26C}, {0xA7AE, 0x26A}, {0xA7B0, 0x29E}, {0xA7B1, 0x287}, {0xA7B2, 0x29D}, {0xA7B3, 0xAB53},
    {0xA7B4, 0xA7B5}, {0xA7B6, 0xA7B7}, {0xA7B8, 0xA7B9}, {0xA7BA, 0xA7BB}, {0xA7BC, 0xA7BD}, {0xA7BE, 0xA7BF},
    {0xA7C2, 0xA7C3}, {0xA7C4, 0xA794}, {0xA7C5, 0x282}, {0xA7C6, 0x1D8E}, {0xA7C7, 0xA7C8}, {0xA7C9, 0xA7CA},
    {0xA7F5, 0xA7F6}, {0xFF21, 0xFF41}, {0xFF22, 0xFF42}, {0xFF23, 0xFF43}, {0xFF24, 0xFF44}, {0xFF25, 0xFF45},
    {0xFF26, 0xFF46}, {0xFF27, 0xFF47}, {0xFF28, 0xFF48}, {0xFF29, 0xFF49}, {0xFF2A, 0xFF4A}, {0xFF2B, 0xFF4B},
    {0xFF2C, 0xFF4C}, {0xFF2D, 0xFF4D}, {0xFF2E, 0xFF4E}, {0xFF2F, 0xFF4F}, {0xFF30, 0xFF50}, {0xFF31, 0xFF51},
    {0xFF32, 0xFF52}, {0xFF33, 0xFF53}, {0xFF34, 0xFF54}, {0xFF35, 0xFF55}, {0xFF36, 0xFF56}, {0xFF37, 0xFF57},
    {0xFF38, 0xFF58}, {0xFF39, 0xFF59}, {0xFF3A, 0xFF5A}, {0x10400, 0x10428}, {0x10401, 0x10429}, {0x10402, 0x1042A},
    {0x10403, 0x1042B}, {0x10404, 0x1042C}, {0x10405, 0x1042D}, {0x10406, 0x1042E}, {0x10407, 0x1042F}, {0x10408, 0x10430},
    {0x10409, 0x10431}, {0x1040A, 0x10432}, {0x1040B, 0x10433}, {0x1040C, 0x10434}, {0x1040D, 0x10435}, {0x1040E, 0x10436},
    {0x1040F, 0x10437}, {0x10410, 0x10438}, {0x10411, 0x10439}, {0x10412, 0x1043A}, {0x10413, 0x1043B}, {0x10414, 0x1043C},
    {0x10415, 0x1043D}, {0x10416, 0x1043E}, {0x10417, 0x1043F}, {0x10418, 0x10440}, {0x10419, 0x10441}, {0x1041A, 0x10442},
    {0x1041B, 0x10443}, {0x1041C, 0x10444}, {0x1041D, 0x10445}, {0x1041E, 0x10446}, {0x1041F, 0x10447}, {0x10420, 0x10448},
    {0x10421, 0x10449}, {0x10422, 0x1044A}, {0x10423, 0x1044B}, {0x10424, 0x1044C}, {0x10425, 0x1044D}, {0x10426, 0x1044E},
    {0x10427, 0x1044F}, {0x104B0, 0x104D8}, {0x104B1, 0x104D9}, {0x104B2, 0x104DA}, {0x104B3, 0x104DB}, {0x104B4, 0x104DC},
    {0x104B5, 0x104DD}, {0x104B6, 0x104DE}, {0x104B7, 0x104DF}, {0x104B8, 0x104E0}, {0x104B9, 0x104E1}, {0x104BA, 0x104E2},
    {0x104BB, 0x104E3}, {0x104BC, 0x104E4}, {0x104BD, 0x104E5}, {0x104BE, 0x104E6}, {0x104BF, 0x104E7}, {0x104C0, 0x104E8},
    {0x104C1, 0x104E9}, {0x104C2, 0x104EA}, {0x104C3, 0x104EB}, {0x104C4, 0x104EC}, {0x104C5, 0x104ED}, {0x104C6, 0x104EE},
    {0x104C7, 0x104EF}, {0x104C8, 0x104F0}, {0x104C9, 0x104F1}, {0x104CA, 0x104F2}, {0x104CB, 0x104F3}, {0x104CC, 0x104F4},
    {0x104CD, 0x104F5}, {0x104CE, 0x104F6}, {0x104CF, 0x104F7}, {0x104D0, 0x104F8}, {0x104D1, 0x104F9}, {0x104D2, 0x104FA},
    {0x104D3, 0x104FB}, {0x10C80, 0x10CC0}, {0x10C81, 0x10CC1}, {0x10C82, 0x10CC2}, {0x10C83, 0x10CC3}, {0x10C84, 0x10CC4},
    {0x10C85, 0x10CC5}, {0x10C86, 0x10CC6}, {0x10C87, 0x10CC7}, {0x10C88, 0x10CC8}, {0x10C89, 0x10CC9}, {0x10C8A, 0x10CCA},
    {0x10C8B, 0x10CCB}, {0x10C8C, 0x10CCC}, {0x10C8D, 0x10CCD}, {0x10C8E, 0x10CCE}, {0x10C8F, 0x10CCF}, {0x10C90, 0x10CD0},
    {0x10C91, 0x10CD1}, {0x10C92, 0x10CD2}, {0x10C93, 0x10CD3}, {0x10C94, 0x10CD4}, {0x10C95, 0x10CD5}, {0x10C96, 0x10CD6},
    {0x10C97, 0x10CD7}, {0x10C98, 0x10CD8}, {0x10C99, 0x10CD9}, {0x10C9A, 0x10CDA}, {0x10C9B, 0x10CDB}, {0x10C9C, 0x10CDC},
    {0x10C9D, 0x10CDD}, {0x10C9E, 0x10CDE}, {0x10C9F, 0x10CDF}, {0x10CA0, 0x10CE0}, {0x10CA1, 0x10CE1}, {0x10CA2, 0x10CE2},
    {0x10CA3, 0x10CE3}, {0x10CA4, 0x10CE4}, {0x10CA5, 0x10CE5}, {0x10CA6, 0x10CE6}, {0x10CA7, 0x10CE7}, {0x10CA8, 0x10CE8},
    {0x10CA9, 0x10CE9}, {0x10CAA, 0x10CEA}, {0x10CAB, 0x10CEB}, {0x10CAC, 0x10CEC}, {0x10CAD, 0x10CED}, {0x10CAE, 0x10CEE},
    {0x10CAF, 0x10CEF}, {0x10CB0, 0x10CF0}, {0x10CB1, 0x10CF1}, {0x10CB2, 0x10CF2}, {0x118A0, 0x118C0}, {0x118A1, 0x118C1},
    {0x118A2, 0x118C2}, {0x118A3, 0x118C3}, {0x118A4, 0x118C4}, {0x118A5, 0x118C5}, {0x118A6, 0x118C6}, {0x118A7, 0x118C7},
    {0x118A8, 0x118C8}, {0x118A9, 0x118C9}, {0x118AA, 0x118CA}, {0x118AB, 0x118CB}, {0x118AC, 0x118CC}, {0x118AD, 0x118CD},
    {0x118AE, 0x118CE}, {0x118AF, 0x118CF}, {0x118B0, 0x118D0}, {0x118B1, 0x118D1}, {0x118B2, 0x118D2}, {0x118B3, 0x118D3},
    {0x118B4, 0x118D4}, {0x118B5, 0x118D5}, {0x118B6, 0x118D6}, {0x118B7, 0x118D7}, {0x118B8, 0x118D8}, {0x118B9, 0x118D9},
    {0x118BA, 0x118DA}, {0x118BB, 0x118DB}, {0x118BC, 0x118DC}, {0x118BD, 0x118DD}, {0x118BE, 0x118DE}, {0x118BF, 0x118DF},
    {0x16E40, 0x16E60}, {0x16E41, 0x16E61}, {0x16E42, 0x16E62}, {0x16E43, 0x16E63}, {0x16E44, 0x16E64}, {0x16E45, 0x16E65},
    {0x16E46, 0x16E66}, {0x16E47, 0x16E67}, {0x16E48, 0x16E68}, {0x16E49, 0x16E69}, {0x16E4A, 0x16E6A}, {0x16E4B, 0x16E6B},
    {0x16E4C, 0x16E6C}, {0x16E4D, 0x16E6D}, {0x16E4E, 0x16E6E}, {0x16E4F, 0x16E6F}, {0x16E50, 0x16E70}, {0x16E51, 0x16E71},
    {0x16E52, 0x16E72}, {0x16E53, 0x16E73}, {0x16E54, 0x16E74}, {0x16E55, 0x16E75}, {0x16E56, 0x16E76}, {0x16E57, 0x16E77},
    {0x16E58, 0x16E78}, {0x16E59, 0x16E79}, {0x16E5A, 0x16E7A}, {0x16E5B, 0x16E7B}, {0x16E5C, 0x16E7C}, {0x16E5D, 0x16E7D},
    {0x16E5E, 0x16E7E}, {0x16E5F, 0x16E7F}, {0x1E900, 0x1E922}, {0x1E901, 0x1E923}, {0x1E902, 0x1E924}, {0x1E903, 0x1E925},
    {0x1E904, 0x1E926}, {0x1E905, 0x1E927}, {0x1E906, 0x1E928}, {0x1E907, 0x1E929}, {0x1E908, 0x1E92A}, {0x1E909, 0x1E92B},
    {0x1E90A, 0x1E92C}, {0x1E90B, 0x1E92D}, {0x1E90C, 0x1E92E}, {0x1E90D, 0x1E92F}, {0x1E90E, 0x1E930}, {0x1E90F, 0x1E931},
    {0x1E910, 0x1E932}, {0x1E911, 0x1E933}, {0x1E912, 0x1E934}, {0x1E913, 0x1E935}, {0x1E914, 0x1E936}, {0x1E915, 0x1E937},
    {0x1E916, 0x1E938}, {0x1E917, 0x1E939}, {0x1E918, 0x1E93A}, {0x1E919, 0x1E93B}, {0x1E91A, 0x1E93C}, {0x1E91B, 0x1E93D},
    {0x1E91C, 0x1E93E}, {0x1E91D, 0x1E93F}, {0x1E91E, 0x1E940}, {0x1E91F, 0x1E941}, {0x1E920, 0x1E942}, {0x1E921, 0x1E943},
};

struct CompatFold {
  char32_t from;
  const char* to;  // UTF-8
};

inline constexpr CompatFold kCompatFold[] = {
    {0xA0, "\x20"},
    {0xA8, "\x20\xcc\x88"},
    {0xAA, "\x61"},
    {0xAF, "\x20\xcc\x84"},
    {0xB2, "\x32"},
    {0xB3, "\x33"},
    {0xB4, "\x20\xcc\x81"},
    {0xB5, "\xce\xbc"},
    {0xB8, "\x20\xcc\xa7"},
    {0xB9, "\x31"},
    {0xBA, "\x6f"},
    {0xBC, "\x31\xe2\x81\x84\x34"},
    {0xBD, "\x31\xe2\x81\x84\x32"},
    {0xBE, "\x33\xe2\x81\x84\x34"},
    {0x132, "\x49\x4a"},
    {0x133, "\x69\x6a"},
    {0x13F, "\x4c\xc2\xb7"},
    {0x140, "\x6c\xc2\xb7"},
    {0x149, "\xca\xbc\x6e"},
    {0x17F, "\x73"},
    {0x1C4, "\x44\xc5\xbd"},
    {0x1C5, "\x44\xc5\xbe"},
    {0x1C6, "\x64\xc5\xbe"},
    {0x1C7, "\x4c\x4a"},
    {0x1C8, "\x4c\x6a"},
    {0x1C9, "\x6c\x6a"},
    {0x1CA, "\x4e\x4a"},
    {0x1CB, "\x4e\x6a"},
    {0x1CC, "\x6e\x6a"},
    {0x1F1, "\x44\x5a"},
    {0x1F2, "\x44\x7a"},
    {0x1F3, "\x64\x7a"},
    {0x2B0, "\x68"},
    {0x2B1, "\xc9\xa6"},
    {0x2B2, "\x6a"},
    {0x2B3, "\x72"},
    {0x2B4, "\xc9\xb9"},
    {0x2B5, "\xc9\xbb"},
    {0x2B6, "\xca\x81"},
    {0x2B7, "\x77"},
    {0x2B8, "\x79"},
    {0x2D8, "\x20\xcc\x86"},
    {0x2D9, "\x20\xcc\x87"},
    {0x2DA, "\x20\xcc\x8a"},
    {0x2DB, "\x20\xcc\xa8"},
    {0x2DC, "\x20\xcc\x83"},
    {0x2DD, "\x20\xcc\x8b"},
    {0x2E0, "\xc9\xa3"},
    {0x2E1, "\x6c"},
    {0x2E2, "\x73"},
    {0x2E3, "\x78"},
    {0x2E4, "\xca\x95"},
    {0x340, "\xcc\x80"},
    {0x341, "\xcc\x81"},
    {0x343, "\xcc\x93"},
    {0x344, "\xcc\x88\xcc\x81"},
    {0x374, "\xca\xb9"},
    {0x37A, "\x20\xcd\x85"},
    {0x37E, "\x3b"},
    {0x384, "\x20\xcc\x81"},
    {0x385, "\x20\xcc\x88\xcc\x81"},
    {0x387, "\xc2\xb7"},
    {0x3D0, "\xce\xb2"},
    {0x3D1, "\xce\xb8"},
    {0x3D2, "\xce\xa5"},
    {0x3D3, "\xce\x8e"},
    {0x3D4, "\xce\xab"},
    {0x3D5, "\xcf\x86"},
    {0x3D6, "\xcf\x80"},
    {0x3F0, "\xce\xba"},
    {0x3F1, "\xcf\x81"},
    {0x3F2, "\xcf\x82"},
    {0x3F4, "\xce\x98"},
    {0x3F5, "\xce\xb5"},
    {0x3F9, "\xce\xa3"},
    {0x587, "\xd5\xa5\xd6\x82"},
    {0x675, "\xd8\xa7\xd9\xb4"},
    {0x676, "\xd9\x88\xd9\xb4"},
    {0x677, "\xdb\x87\xd9\xb4"},
    {0x678, "\xd9\x8a\xd9\xb4"},
    {0x958, "\xe0\xa4\x95\xe0\xa4\xbc"},
    {0x959, "\xe0\xa4\x96\xe0\xa4\xbc"},
    {0x95A, "\xe0\xa4\x97\xe0\xa4\xbc"},
    {0x95B, "\xe0\xa4\x9c\xe0\xa4\xbc"},
    {0x95C, "\xe0\xa4\xa1\xe0\xa4\xbc"},
    {0x95D, "\xe0\xa4\xa2\xe0\xa4\xbc"},
    {0x95E, "\xe0\xa4\xab\xe0\xa4\xbc"},
    {0x95F, "\xe0\xa4\xaf\xe0\xa4\xbc"},
    {0x9DC, "\xe0\xa6\xa1\xe0\xa6\xbc"},
    {0x9DD, "\xe0\xa6\xa2\xe0\xa6\xbc"},
    {0x9DF, "\xe0\xa6\xaf\xe0\xa6\xbc"},
    {0xA33, "\xe0\xa8\xb2\xe0\xa8\xbc"},
    {0xA36, "\xe0\xa8\xb8\xe0\xa8\xbc"},
    {0xA59, "\xe0\xa8\x96\xe0\xa8\xbc"},
    {0xA5A, "\xe0\xa8\x97\xe0\xa8\xbc"},
    {0xA5B, "\xe0\xa8\x9c\xe0\xa8\xbc"},
    {0xA5E, "\xe0\xa8\xab\xe0\xa8\xbc"},
    {0xB5C, "\xe0\xac\xa1\xe0\xac\xbc"},
    {0xB5D, "\xe0\xac\xa2\xe0\xac\xbc"},
    {0xE33, "\xe0\xb9\x8d\xe0\xb8\xb2"},
    {0xEB3, "\xe0\xbb\x8d\xe0\xba\xb2"},
    {0xEDC, "\xe0\xba\xab\xe0\xba\x99"},
    {0xEDD, "\xe0\xba\xab\xe0\xba\xa1"},
    {0xF0C, "\xe0\xbc\x8b"},
    {0xF43, "\xe0\xbd\x82\xe0\xbe\xb7"},
    {0xF4D, "\xe0\xbd\x8c\xe0\xbe\xb7"},
    {0xF52, "\xe0\xbd\x91\xe0\xbe\xb7"},
    {0xF57, "\xe0\xbd\x96\xe0\xbe\xb7"},
    {0xF5C, "\xe0\xbd\x9b\xe0\xbe\xb7"},
    {0xF69, "\xe0\xbd\x80\xe0\xbe\xb5"},
    {0xF73, "\xe0\xbd\xb1\xe0\xbd\xb2"},
    {0xF75, "\xe0\xbd\xb1\xe0\xbd\xb4"},
    {0xF76, "\xe0\xbe\xb2\xe0\xbe\x80"},
    {0xF77, "\xe0\xbe\xb2\xe0\xbd\xb1\xe0\xbe\x80"},
    {0xF78, "\xe0\xbe\xb3\xe0\xbe\x80"},
    {0xF79, "\xe0\xbe\xb3\xe0\xbd\xb1\xe0\xbe\x80"},
    {0xF81, "\xe0\xbd\xb1\xe0\xbe\x80"},
    {0xF93, "\xe0\xbe\x92\xe0\xbe\xb7"},
    {0xF9D, "\xe0\xbe\x9c\xe0\xbe\xb7"},
    {0xFA2, "\xe0\xbe\xa1\xe0\xbe\xb7"},
    {0xFA7, "\xe0\xbe\xa6\xe0\xbe\xb7"},
    {0xFAC, "\xe0\xbe\xab\xe0\xbe\xb7"},
    {0xFB9, "\xe0\xbe\x90\xe0\xbe\xb5"},
    {0x10FC, "\xe1\x83\x9c"},
    {0x1D2C, "\x41"},
    {0x1D2D, "\xc3\x86"},
    {0x1D2E, "\x42"},
    {0x1D30, "\x44"},
    {0x1D31, "\x45"},
    {0x1D32, "\xc6\x8e"},
    {0x1D33, "\x47"},
    {0x1D34, "\x48"},
    {0x1D35, "\x49"},
    {0x1D36, "\x4a"},
    {0x1D37, "\x4b"},
    {0x1D38, "\x4c"},
    {0x1D39, "\x4d"},
    {0x1D3A, "\x4e"},
    {0x1D3C, "\x4f"},
    {0x1D3D, "\xc8\xa2"},
    {0x1D3E, "\x50"},
    {0x1D3F, "\x52"},
    {0x1D40, "\x54"},
    {0x1D41, "\x55"},
    {0x1D42, "\x57"},
    {0x1D43, "\x61"},
    {0x1D44, "\xc9\x90"},
    {0x1D45, "\xc9\x91"},
    {0x1D46, "\xe1\xb4\x82"},
    {0x1D47, "\x62"},
    {0x1D48, "\x64"},
    {0x1D49, "\x65"},
    {0x1D4A, "\xc9\x99"},
    {0x1D4B, "\xc9\x9b"},
    {0x1D4C, "\xc9\x9c"},
    {0x1D4D, "\x67"},
    {0x1D4F, "\x6b"},
    {0x1D50, "\x6d"},
    {0x1D51, "\xc5\x8b"},
    {0x1D52, "\x6f"},
    {0x1D53, "\xc9\x94"},
    {0x1D54, "\xe1\xb4\x96"},
    {0x1D55, "\xe1\xb4\x97"},
    {0x1D56, "\x70"},
    {0x1D57, "\x74"},
    {0x1D58, "\x75"},
    {0x1D59, "\xe1\xb4\x9d"},
    {0x1D5A, "\xc9\xaf"},
    {0x1D5B, "\x76"},
    {0x1D5C, "\xe1\xb4\xa5"},
    {0x1D5D, "\xce\xb2"},
    {0x1D5E, "\xce\xb3"},
    {0x1D5F, "\xce\xb4"},
    {0x1D60, "\xcf\x86"},
    {0x1D61, "\xcf\x87"},
    {0x1D62, "\x69"},
    {0x1D63, "\x72"},
    {0x1D64, "\x75"},
    {0x1D65, "\x76"},
    {0x1D66, "\xce\xb2"},
    {0x1D67, "\xce\xb3"},
    {0x1D68, "\xcf\x81"},
    {0x1D69, "\xcf\x86"},
    {0x1D6A, "\xcf\x87"},
    {0x1D78, "\xd0\xbd"},
    {0x1D9B, "\xc9\x92"},
    {0x1D9C, "\x63"},
    {0x1D9D, "\xc9\x95"},
    {0x1D9E, "\xc3\xb0"},
    {0x1D9F, "\xc9\x9c"},
    {0x1DA0, "\x66"},
    {0x1DA1, "\xc9\x9f"},
    {0x1DA2, "\xc9\xa1"},
    {0x1DA3, "\xc9\xa5"},
    {0x1DA4, "\xc9\xa8"},
    {0x1DA5, "\xc9\xa9"},
    {0x1DA6, "\xc9\xaa"},
    {0x1DA7, "\xe1\xb5\xbb"},
    {0x1DA8, "\xca\x9d"},
    {0x1DA9, "\xc9\xad"},
    {0x1DAA, "\xe1\xb6\x85"},
    {0x1DAB, "\xca\x9f"},
    {0x1DAC, "\xc9\xb1"},
    {0x1DAD, "\xc9\xb0"},
    {0x1DAE, "\xc9\xb2"},
    {0x1DAF, "\xc9\xb3"},
    {0x1DB0, "\xc9\xb4"},
    {0x1DB1, "\xc9\xb5"},
    {0x1DB2, "\xc9\xb8"},
    {0x1DB3, "\xca\x82"},
    {0x1DB4, "\xca\x83"},
    {0x1DB5, "\xc6\xab"},
    {0x1DB6, "\xca\x89"},
    {0x1DB7, "\xca\x8a"},
    {0x1DB8, "\xe1\xb4\x9c"},
    {0x1DB9, "\xca\x8b"},
    {0x1DBA, "\xca\x8c"},
    {0x1DBB, "\x7a"},
    {0x1DBC, "\xca\x90"},
    {0x1DBD, "\xca\x91"},
    {0x1DBE, "\xca\x92"},
    {0x1DBF, "\xce\xb8"},
    {0x1E9A, "\x61\xca\xbe"},
    {0x1E9B, "\xe1\xb9\xa1"},
    {0x1F71, "\xce\xac"},
    {0x1F73, "\xce\xad"},
    {0x1F75, "\xce\xae"},
    {0x1F77, "\xce\xaf"},
    {0x1F79, "\xcf\x8c"},
    {0x1F7B, "\xcf\x8d"},
    {0x1F7D, "\xcf\x8e"},
    {0x1FBB, "\xce\x86"},
    {0x1FBD, "\x20\xcc\x93"},
    {0x1FBE, "\xce\xb9"},
    {0x1FBF, "\x20\xcc\x93"},
    {0x1FC0, "\x20\xcd\x82"},
    {0x1FC1, "\x20\xcc\x88\xcd\x82"},
    {0x1FC9, "\xce\x88"},
    {0x1FCB, "\xce\x89"},
    {0x1FCD, "\x20\xcc\x93\xcc\x80"},
    {0x1FCE, "\x20\xcc\x93\xcc\x81"},
    {0x1FCF, "\x20\xcc\x93\xcd\x82"},
    {0x1FD3, "\xce\x90"},
    {0x1FDB, "\xce\x8a"},
    {0x1FDD, "\x20\xcc\x94\xcc\x80"},
    {0x1FDE, "\x20\xcc\x94\xcc\x81"},
    {0x1FDF, "\x20\xcc\x94\xcd\x82"},
    {0x1FE3, "\xce\xb0"},
    {0x1FEB, "\xce\x8e"},
    {0x1FED, "\x20\xcc\x88\xcc\x80"},
    {0x1FEE, "\x20\xcc\x88\xcc\x81"},
    {0x1FEF, "\x60"},
    {0x1FF9, "\xce\x8c"},
    {0x1FFB, "\xce\x8f"},
    {0x1FFD, "\x20\xcc\x81"},
    {0x1FFE, "\x20\xcc\x94"},
    {0x2000, "\x20"},
    {0x2001, "\x20"},
    {0x2002, "\x20"},
    {0x2003, "\x20"},
    {0x2004, "\x20"},
    {0x2005, "\x20"},
    {0x2006, "\x20"},
    {0x2007, "\x20"},
    {0x2008, "\x20"},
    {0x2009, "\x20"},
    {0x200A, "\x20"},
    {0x2011, "\xe2\x80\x90"},
    {0x2017, "\x20\xcc\xb3"},
    {0x2024, "\x2e"},
    {0x2025, "\x2e\x2e"},
    {0x2026, "\x2e\x2e\x2e"},
    {0x202F, "\x20"},
    {0x2033, "\xe2\x80\xb2\xe2\x80\xb2"},
    {0x2034, "\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2"},
    {0x2036, "\xe2\x80\xb5\xe2\x80\xb5"},
    {0x2037, "\xe2\x80\xb5\xe2\x80\xb5\xe2\x80\xb5"},
    {0x203C, "\x21\x21"},
    {0x203E, "\x20\xcc\x85"},
    {0x2047, "\x3f\x3f"},
    {0x2048, "\x3f\x21"},
    {0x2049, "\x21\x3f"},
    {0x2057, "\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2\xe2\x80\xb2"},
    {0x205F, "\x20"},
    {0x2070, "\x30"},
    {0x2071, "\x69"},
    {0x2074, "\x34"},
    {0x2075, "\x35"},
    {0x2076, "\x36"},
    {0x2077, "\x37"},
    {0x2078, "\x38"},
    {0x2079, "\x39"},
    {0x207A, "\x2b"},
    {0x207B, "\xe2\x88\x92"},
    {0x207C, "\x3d"},
    {0x207D, "\x28"},
    {0x207E, "\x29"},
    {0x207F, "\x6e"},
    {0x2080, "\x30"},
    {0x2081, "\x31"},
    {0x2082, "\x32"},
    {0x2083, "\x33"},
    {0x2084, "\x34"},
    {0x2085, "\x35"},
    {0x2086, "\x36"},
    {0x2087, "\x37"},
    {0x2088, "\x38"},
    {0x2089, "\x39"},
    {0x208A, "\x2b"},
    {0x208B, "\xe2\x88\x92"},
    {0x208C, "\x3d"},
    {0x208D, "\x28"},
    {0x208E, "\x29"},
    {0x2090, "\x61"},
    {0x2091, "\x65"},
    {0x2092, "\x6f"},
    {0x2093, "\x78"},
    {0x2094, "\xc9\x99"},
    {0x2095, "\x68"},
    {0x2096, "\x6b"},
    {0x2097, "\x6c"},
    {0x2098, "\x6d"},
    {0x2099, "\x6e"},
    {0x209A, "\x70"},
    {0x209B, "\x73"},
    {0x209C, "\x74"},
    {0x20A8, "\x52\x73"},
    {0x2100, "\x61\x2f\x63"},
    {0x2101, "\x61\x2f\x73"},
    {0x2102, "\x43"},
    {0x2103, "\xc2\xb0\x43"},
    {0x2105, "\x63\x2f\x6f"},
    {0x2106, "\x63\x2f\x75"},
    {0x2107, "\xc6\x90"},
    {0x2109, "\xc2\xb0\x46"},
    {0x210A, "\x67"},
    {0x210B, "\x48"},
    {0x210C, "\x48"},
    {0x210D, "\x48"},
    {0x210E, "\x68"},
    {0x210F, "\xc4\xa7"},
    {0x2110, "\x49"},
    {0x2111, "\x49"},
    {0x2112, "\x4c"},
    {0x2113, "\x6c"},
    {0x2115, "\x4e"},
    {0x2116, "\x4e\x6f"},
    {0x2119, "\x50"},
    {0x211A, "\x51"},
    {0x211B, "\x52"},
    {0x211C, "\x52"},
    {0x211D, "\x52"},
    {0x2120, "\x53\x4d"},
    {0x2121, "\x54\x45\x4c"},
    {0x2122, "\x54\x4d"},
    {0x2124, "\x5a"},
    {0x2126, "\xce\xa9"},
    {0x2128, "\x5a"},
    {0x212A, "\x4b"},
    {0x212B, "\xc3\x85"},
    {0x212C, "\x42"},
    {0x212D, "\x43"},
    {0x212F, "\x65"},
    {0x2130, "\x45"},
    {0x2131, "\x46"},
    {0x2133, "\x4d"},
    {0x2134, "\x6f"},
    {0x2135, "\xd7\x90"},
    {0x2136, "\xd7\x91"},
    {0x2137, "\xd7\x92"},
    {0x2138, "\xd7\x93"},
    {0x2139, "\x69"},
    {0x213B, "\x46\x41\x58"},
    {0x213C, "\xcf\x80"},
    {0x213D, "\xce\xb3"},
    {0x213E, "\xce\x93"},
    {0x213F, "\xce\xa0"},
    {0x2140, "\xe2\x88\x91"},
    {0x2145, "\x44"},
    {0x2146, "\x64"},
    {0x2147, "\x65"},
    {0x2148, "\x69"},
    {0x2149, "\x6a"},
    {0x2150, "\x31\xe2\x81\x84\x37"},
    {0x2151, "\x31\xe2\x81\x84\x39"},
    {0x2152, "\x31\xe2\x81\x84\x31\x30"},
    {0x2153, "\x31\xe2\x81\x84\x33"},
    {0x2154, "\x32\xe2\x81\x84\x33"},
    {0x2155, "\x31\xe2\x81\x84\x35"},
    {0x2156, "\x32\xe2\x81\x84\x35"},
    {0x2157, "\x33\xe2\x81\x84\x35"},
    {0x2158, "\x34\xe2\x81\x84\x35"},
    {0x2159, "\x31\xe2\x81\x84\x36"},
    {0x215A, "\x35\xe2\x81\x84\x36"},
    {0x215B, "\x31\xe2\x81\x84\x38"},
    {0x215C, "\x33\xe2\x81\x84\x38"},
    {0x215D, "\x35\xe2\x81\x84\x38"},
    {0x215E, "\x37\xe2\x81\x84\x38"},
    {0x215F, "\x31\xe2\x81\x84"},
    {0x2160, "\x49"},
    {0x2161, "\x49\x49"},
    {0x2162, "\x49\x49\x49"},
    {0x2163, "\x49\x56"},
    {0x2164, "\x56"},
    {0x2165, "\x56\x49"},
    {0x2166, "\x56\x49\x49"},
    {0x2167, "\x56\x49\x49\x49"},
    {0x2168, "\x49\x58"},
    {0x2169, "\x58"},
    {0x216A, "\x58\x49"},
    {0x216B, "\x58\x49\x49"},
    {0x216C, "\x4c"},
    {0x216D, "\x43"},
    {0x216E, "\x44"},
    {0x216F, "\x4d"},
    {0x2170, "\x69"},
    {0x2171, "\x69\x69"},
    {0x2172, "\x69\x69\x69"},
    {0x2173, "\x69\x76"},
    {0x2174, "\x76"},
    {0x2175, "\x76\x69"},
    {0x2176, "\x76\x69\x69"},
    {0x2177, "\x76\x69\x69\x69"},
    {0x2178, "\x69\x78"},
    {0x2179, "\x78"},
    {0x217A, "\x78\x69"},
    {0x217B, "\x78\x69\x69"},
    {0x217C, "\x6c"},
    {0x217D, "\x63"},
    {0x217E, "\x64"},
    {0x217F, "\x6d"},
    {0x2189, "\x30\xe2\x81\x84\x33"},
    {0x222C, "\xe2\x88\xab\xe2\x88\xab"},
    {0x222D, "\xe2\x88\xab\xe2\x88\xab\xe2\x88\xab"},
    {0x222F, "\xe2\x88\xae\xe2\x88\xae"},
    {0x2230, "\xe2\x88\xae\xe2\x88\xae\xe2\x88\xae"},
    {0x2329, "\xe3\x80\x88"},
    {0x232A, "\xe3\x80\x89"},
    {0x2460, "\x31"},
    {0x2461, "\x32"},
    {0x2462, "\x33"},
    {0x2463, "\x34"},
    {0x2464, "\x35"},
    {0x2465, "\x36"},
    {0x2466, "\x37"},
    {0x2467, "\x38"},
    {0x2468, "\x39"},
    {0x2469, "\x31\x30"},
    {0x246A, "\x31\x31"},
    {0x246B, "\x31\x32"},
    {0x246C, "\x31\x33"},
    {0x246D, "\x31\x34"},
    {0x246E, "\x31\x35"},
    {0x246F, "\x31\x36"},
    {0x2470, "\x31\x37"},
    {0x2471, "\x31\x38"},
    {0x2472, "\x31\x39"},
    {0x2473, "\x32\x30"},
    {0x2474, "\x28\x31\x29"},
    {0x2475, "\x28\x32\x29"},
    {0x2476, "\x28\x33\x29"},
    {0x2477, "\x28\x34\x29"},
    {0x2478, "\x28\x35\x29"},
    {0x2479, "\x28\x36\x29"},
    {0x247A, "\x28\x37\x29"},
    {0x247B, "\x28\x38\x29"},
    {0x247C, "\x28\x39\x29"},
    {0x247D, "\x28\x31\x30\x29"},
    {0x247E, "\x28\x31\x31\x29"},
    {0x247F, "\x28\x31\x32\x29"},
    {0x2480, "\x28\x31\x33\x29"},
    {0x2481, "\x28\x31\x34\x29"},
    {0x2482, "\x28\x31\x35\x29"},
    {0x2483, "\x28\x31\x36\x29"},
    {0x2484, "\x28\x31\x37\x29"},
    {0x2485, "\x28\x31\x38\x29"},
    {0x2486, "\x28\x31\x39\x29"},
    {0x2487, "\x28\x32\x30\x29"},
    {0x2488, "\x31\x2e"},
    {0x2489, "\x32\x2e"},
    {0x248A, "\x33\x2e"},
    {0x248B, "\x34\x2e"},
    {0x248C, "\x35\x2e"},
    {0x248D, "\x36\x2e"},
    {0x248E, "\x37\x2e"},
    {0x248F, "\x38\x2e"},
    {0x2490, "\x39\x2e"},
    {0x2491, "\x31\x30\x2e"},
    {0x2492, "\x31\x31\x2e"},
    {0x2493, "\x31\x32\x2e"},
    {0x2494, "\x31\x33\x2e"},
    {0x2495, "\x31\x34\x2e"},
    {0x2496, "\x31\x35\x2e"},
    {0x2497, "\x31\x36\x2e"},
    {0x2498, "\x31\x37\x2e"},
    {0x2499, "\x31\x38\x2e"},
    {0x249A, "\x31\x39\x2e"},
    {0x249B, "\x32\x30\x2e"},
    {0x249C, "\x28\x61\x29"},
    {0x249D, "\x28\x62\x29"},
    {0x249E, "\x28\x63\x29"},
    {0x249F, "\x28\x64\x29"},
    {0x24A0, "\x28\x65\x29"},
    {0x24A1, "\x28\x66\x29"},
    {0x24A2, "\x28\x67\x29"},
    {0x24A3, "\x28\x68\x29"},
    {0x24A4, "\x28\x69\x29"},
    {0x24A5, "\x28\x6a\x29"},
    {0x24A6, "\x28\x6b\x29"},
    {0x24A7, "\x28\x6c\x29"},
    {0x24A8, "\x28\x6d\x29"},
    {0x24A9, "\x28\x6e\x29"},
    {0x24AA, "\x28\x6f\x29"},
    {0x24AB, "\x28\x70\x29"},
    {0x24AC, "\x28\x71\x29"},
    {0x24AD, "\x28\x72\x29"},
    {0x24AE, "\x28\x73\x29"},
    {0x24AF, "\x28\x74\x29"},
    {0x24B0, "\x28\x75\x29"},
    {0x24B1, "\x28\x76\x29"},
    {0x24B2, "\x28\x77\x29"},
    {0x24B3, "\x28\x78\x29"},
    {0x24B4, "\x28\x79\x29"},
    {0x24B5, "\x28\x7a\x29"},
    {0x24B6, "\x41"},
    {0x24B7, "\x42"},
    {0x24B8, "\x43"},
    {0x24B9, "\x44"},
    {0x24BA, "\x45"},
    {0x24BB, "\x46"},
    {0x24BC, "\x47"},
    {0x24BD, "\x48"},
    {0x24BE, "\x49"},
    {0x24BF, "\x4a"},
    {0x24C0, "\x4b"},
    {0x24C1, "\x4c"},
    {0x24C2, "\x4d"},
    {0x24C3, "\x4e"},
    {0x24C4, "\x4f"},
    {0x24C5, "\x50"},
    {0x24C6, "\x51"},
    {0x24C7, "\x52"},
    {0x24C8, "\x53"},
    {0x24C9, "\x54"},
    {0x24CA, "\x55"},
    {0x24CB, "\x56"},
    {0x24CC, "\x57"},
    {0x24CD, "\x58"},
    {0x24CE, "\x59"},
    {0x24CF, "\x5a"},
    {0x24D0, "\x61"},
    {0x24D1, "\x62"},
    {0x24D2, "\x63"},
    {0x24D3, "\x64"},
    {0x24D4, "\x65"},
    {0x24D5, "\x66"},
    {0x24D6, "\x67"},
    {0x24D7, "\x68"},
    {0x24D8, "\x69"},
    {0x24D9, "\x6a"},
    {0x24DA, "\x6b"},
    {0x24DB, "\x6c"},
    {0x24DC, "\x6d"},
    {0x24DD, "\x6e"},
    {0x24DE, "\x6f"},
    {0x24DF, "\x70"},
    {0x24E0, "\x71"},
    {0x24E1, "\x72"},
    {0x24E2, "\x73"},
    {0x24E3, "\x74"},
    {0x24E4, "\x75"},
    {0x24E5, "\x76"},
    {0x24E6, "\x77"},
    {0x24E7, "\x78"},
    {0x24E8, "\x79"},
    {0x24E9, "\x7a"},
    {0x24EA, "\x30"},
    {0x2A0C, "\xe2\x88\xab\xe2\x88\xab\xe2\x88\xab\xe2\x88\xab"},
    {0x2A74, "\x3a\x3a\x3d"},
    {0x2A75, "\x3d\x3d"},
    {0x2A76, "\x3d\x3d\x3d"},
    {0x2ADC, "\xe2\xab\x9d\xcc\xb8"},
    {0x2C7C, "\x6a"},
    {0x2C7D, "\x56"},
    {0x2D6F, "\xe2\xb5\xa1"},
    {0x2E9F, "\xe6\xaf\x8d"},
    {0x2EF3, "\xe9\xbe\x9f"},
    {0x2F00, "\xe4\xb8\x80"},
    {0x2F01, "\xe4\xb8\xa8"},
    {0x2F02, "\xe4\xb8\xb6"},
    {0x2F03, "\xe4\xb8\xbf"},
    {0x2F04, "\xe4\xb9\x99"},
    {0x2F05, "\xe4\xba\x85"},
    {0x2F06, "\xe4\xba\x8c"},
    {0x2F07, "\xe4\xba\xa0"},
    {0x2F08, "\xe4\xba\xba"},
    {0x2F09, "\xe5\x84\xbf"},
    {0x2F0A, "\xe5\x85\xa5"},
    {0x2F0B, "\xe5\x85\xab"},
    {0x2F0C, "\xe5\x86\x82"},
    {0x2F0D, "\xe5\x86\x96"},
    {0x2F0E, "\xe5\x86\xab"},
    {0x2F0F, "\xe5\x87\xa0"},
    {0x2F10, "\xe5\x87\xb5"},
    {0x2F11, "\xe5\x88\x80"},
    {0x2F12, "\xe5\x8a\x9b"},
    {0x2F13, "\xe5\x8b\xb9"},
    {0x2F14, "\xe5\x8c\x95"},
    {0x2F15, "\xe5\x8c\x9a"},
    {0x2F16, "\xe5\x8c\xb8"},
    {0x2F17, "\xe5\x8d\x81"},
    {0x2F18, "\xe5\x8d\x9c"},
    {0x2F19, "\xe5\x8d\xa9"},
    {0x2F1A, "\xe5\x8e\x82"},
    {0x2F1B, "\xe5\x8e\xb6"},
    {0x2F1C, "\xe5\x8f\x88"},
    {0x2F1D, "\xe5\x8f\xa3"},
    {0x2F1E, "\xe5\x9b\x97"},
    {0x2F1F, "\xe5\x9c\x9f"},
    {0x2F20, "\xe5\xa3\xab"},
    {0x2F21, "\xe5\xa4\x82"},
    {0x2F22, "\xe5\xa4\x8a"},
    {0x2F23, "\xe5\xa4\x95"},
    {0x2F24, "\xe5\xa4\xa7"},
    {0x2F25, "\xe5\xa5\xb3"},
    {0x2F26, "\xe5\xad\x90"},
    {0x2F27, "\xe5\xae\x80"},
    {0x2F28, "\xe5\xaf\xb8"},
    {0x2F29, "\xe5\xb0\x8f"},
    {0x2F2A, "\xe5\xb0\xa2"},
    {0x2F2B, "\xe5\xb0\xb8"},
    {0x2F2C, "\xe5\xb1\xae"},
    {0x2F2D, "\xe5\xb1\xb1"},
    {0x2F2E, "\xe5\xb7\x9b"},
    {0x2F2F, "\xe5\xb7\xa5"},
    {0x2F30, "\xe5\xb7\xb1"},
    {0x2F31, "\xe5\xb7\xbe"},
    {0x2F32, "\xe5\xb9\xb2"},
    {0x2F33, "\xe5\xb9\xba"},
    {0x2F34, "\xe5\xb9\xbf"},
    {0x2F35, "\xe5\xbb\xb4"},
    {0x2F36, "\xe5\xbb\xbe"},
    {0x2F37, "\xe5\xbc\x8b"},
    {0x2F38, "\xe5\xbc\x93"},
    {0x2F39, "\xe5\xbd\x90"},
    {0x2F3A, "\xe5\xbd\xa1"},
    {0x2F3B, "\xe5\xbd\xb3"},
    {0x2F3C, "\xe5\xbf\x83"},
    {0x2F3D, "\xe6\x88\x88"},
    {0x2F3E, "\xe6\x88\xb6"},
    {0x2F3F, "\xe6\x89\x8b"},
    {0x2F40, "\xe6\x94\xaf"},
    {0x2F41, "\xe6\x94\xb4"},
    {0x2F42, "\xe6\x96\x87"},
    {0x2F43, "\xe6\x96\x97"},
    {0x2F44, "\xe6\x96\xa4"},
    {0x2F45, "\xe6\x96\xb9"},
    {0x2F46, "\xe6\x97\xa0"},
    {0x2F47, "\xe6\x97\xa5"},
    {0x2F48, "\xe6\x9b\xb0"},
    {0x2F49, "\xe6\x9c\x88"},
    {0x2F4A, "\xe6\x9c\xa8"},
    {0x2F4B, "\xe6\xac\xa0"},
    {0x2F4C, "\xe6\xad\xa2"},
    {0x2F4D, "\xe6\xad\xb9"},
    {0x2F4E, "\xe6\xae\xb3"},
    {0x2F4F, "\xe6\xaf\x8b"},
    {0x2F50, "\xe6\xaf\x94"},
    {0x2F51, "\xe6\xaf\x9b"},
    {0x2F52, "\xe6\xb0\x8f"},
    {0x2F53, "\xe6\xb0\x94"},
    {0x2F54, "\xe6\xb0\xb4"},
    {0x2F55, "\xe7\x81\xab"},
    {0x2F56, "\xe7\x88\xaa"},
    {0x2F57, "\xe7\x88\xb6"},
    {0x2F58, "\xe7\x88\xbb"},
    {0x2F59, "\xe7\x88\xbf"},
    {0x2F5A, "\xe7\x89\x87"},
    {0x2F5B, "\xe7\x89\x99"},
    {0x2F5C, "\xe7\x89\x9b"},
    {0x2F5D, "\xe7\x8a\xac"},
    {0x2F5E, "\xe7\x8e\x84"},
    {0x2F5F, "\xe7\x8e\x89"},
    {0x2F60, "\xe7\x93\x9c"},
    {0x2F61, "\xe7\x93\xa6"},
    {0x2F62, "\xe7\x94\x98"},
    {0x2F63, "\xe7\x94\x9f"},
    {0x2F64, "\xe7\x94\xa8"},
    {0x2F65, "\xe7\x94\xb0"},
    {0x2F66, "\xe7\x96\x8b"},
    {0x2F67, "\xe7\x96\x92"},
    {0x2F68, "\xe7\x99\xb6"},
    {0x2F69, "\xe7\x99\xbd"},
    {0x2F6A, "\xe7\x9a\xae"},
    {0x2F6B, "\xe7\x9a\xbf"},
    {0x2F6C, "\xe7\x9b\xae"},
    {0x2F6D, "\xe7\x9f\x9b"},
    {0x2F6E, "\xe7\x9f\xa2"},
    {0x2F6F, "\xe7\x9f\xb3"},
    {0x2F70, "\xe7\xa4\xba"},
    {0x2F71, "\xe7\xa6\xb8"},
    {0x2F72, "\xe7\xa6\xbe"},
    {0x2F73, "\xe7\xa9\xb4"},
    {0x2F74, "\xe7\xab\x8b"},
    {0x2F75, "\xe7\xab\xb9"},
    {0x2F76, "\xe7\xb1\xb3"},
    {0x2F77, "\xe7\xb3\xb8"},
    {0x2F78, "\xe7\xbc\xb6"},
    {0x2F79, "\xe7\xbd\x91"},
    {0x2F7A, "\xe7\xbe\x8a"},
    {0x2F7B, "\xe7\xbe\xbd"},
    {0x2F7C, "\xe8\x80\x81"},
    {0x2F7D, "\xe8\x80\x8c"},
    {0x2F7E, "\xe8\x80\x92"},
    {0x2F7F, "\xe8\x80\xb3"},
    {0x2F80, "\xe8\x81\xbf"},
    {0x2F81, "\xe8\x82\x89"},
    {0x2F82, "\xe8\x87\xa3"},
    {0x2F83, "\xe8\x87\xaa"},
    {0x2F84, "\xe8\x87\xb3"},
    {0x2F85, "\xe8\x87\xbc"},
    {0x2F86, "\xe8\x88\x8c"},
    {0x2F87, "\xe8\x88\x9b"},
    {0x2F88, "\xe8\x88\x9f"},
    {0x2F89, "\xe8\x89\xae"},
    {0x2F8A, "\xe8\x89\xb2"},
    {0x2F8B, "\xe8\x89\xb8"},
    {0x2F8C, "\xe8\x99\x8d"},
    {0x2F8D, "\xe8\x99\xab"},
    {0x2F8E, "\xe8\xa1\x80"},
    {0x2F8F, "\xe8\xa1\x8c"},
    {0x2F90, "\xe8\xa1\xa3"},
    {0x2F91, "\xe8\xa5\xbe"},
    {0x2F92, "\xe8\xa6\x8b"},
    {0x2F93, "\xe8\xa7\x92"},
    {0x2F94, "\xe8\xa8\x80"},
    {0x2F95, "\xe8\xb0\xb7"},
    {0x2F96, "\xe8\xb1\x86"},
    {0x2F97, "\xe8\xb1\x95"},
    {0x2F98, "\xe8\xb1\xb8"},
    {0x2F99, "\xe8\xb2\x9d"},
    {0x2F9A, "\xe8\xb5\xa4"},
    {0x2F9B, "\xe8\xb5\xb0"},
    {0x2F9C, "\xe8\xb6\xb3"},
    {0x2F9D, "\xe8\xba\xab"},
    {0x2F9E, "\xe8\xbb\x8a"},
    {0x2F9F, "\xe8\xbe\x9b"},
    {0x2FA0, "\xe8\xbe\xb0"},
    {0x2FA1, "\xe8\xbe\xb5"},
    {0x2FA2, "\xe9\x82\x91"},
    {0x2FA3, "\xe9\x85\x89"},
    {0x2FA4, "\xe9\x87\x86"},
    {0x2FA5, "\xe9\x87\x8c"},
    {0x2FA6, "\xe9\x87\x91"},
    {0x2FA7, "\xe9\x95\xb7"},
    {0x2FA8, "\xe9\x96\x80"},
    {0x2FA9, "\xe9\x98\x9c"},
    {0x2FAA, "\xe9\x9a\xb6"},
    {0x2FAB, "\xe9\x9a\xb9"},
    {0x2FAC, "\xe9\x9b\xa8"},
    {0x2FAD, "\xe9\x9d\x91"},
    {0x2FAE, "\xe9\x9d\x9e"},
    {0x2FAF, "\xe9\x9d\xa2"},
    {0x2FB0, "\xe9\x9d\xa9"},
    {0x2FB1, "\xe9\x9f\x8b"},
    {0x2FB2, "\xe9\x9f\xad"},
    {0x2FB3, "\xe9\x9f\xb3"},
    {0x2FB4, "\xe9\xa0\x81"},
    {0x2FB5, "\xe9\xa2\xa8"},
    {0x2FB6, "\xe9\xa3\x9b"},
    {0x2FB7, "\xe9\xa3\x9f"},
    {0x2FB8, "\xe9\xa6\x96"},
    {0x2FB9, "\xe9\xa6\x99"},
    {0x2FBA, "\xe9\xa6\xac"},
    {0x2FBB, "\xe9\xaa\xa8"},
    {0x2FBC, "\xe9\xab\x98"},
    {0x2FBD, "\xe9\xab\x9f"},
    {0x2FBE, "\xe9\xac\xa5"},
    {0x2FBF, "\xe9\xac\xaf"},
    {0x2FC0, "\xe9\xac\xb2"},
    {0x2FC1, "\xe9\xac\xbc"},
    {0x2FC2, "\xe9\xad\x9a"},
    {0x2FC3, "\xe9\xb3\xa5"},
    {0x2FC4, "\xe9\xb9\xb5"},
    {0x2FC5, "\xe9\xb9\xbf"},
    {0x2FC6, "\xe9\xba\xa5"},
    {0x2FC7, "\xe9\xba\xbb"},
    {0x2FC8, "\xe9\xbb\x83"},
    {0x2FC9, "\xe9\xbb\x8d"},
    {0x2FCA, "\xe9\xbb\x91"},
    {0x2FCB, "\xe9\xbb\xb9"},
    {0x2FCC, "\xe9\xbb\xbd"},
    {0x2FCD, "\xe9\xbc\x8e"},
    {0x2FCE, "\xe9\xbc\x93"},
    {0x2FCF, "\xe9\xbc\xa0"},
    {0x2FD0, "\xe9\xbc\xbb"},
    {0x2FD1, "\xe9\xbd\x8a"},
    {0x2FD2, "\xe9\xbd\x92"},
    {0x2FD3, "\xe9\xbe\x8d"},
    {0x2FD4, "\xe9\xbe\x9c"},
    {0x2FD5, "\xe9\xbe\xa0"},
    {0x3000, "\x20"},
    {0x3036, "\xe3\x80\x92"},
    {0x3038, "\xe5\x8d\x81"},
    {0x3039, "\xe5\x8d\x84"},
    {0x303A, "\xe5\x8d\x85"},
    {0x309B, "\x20\xe3\x82\x99"},
    {0x309C, "\x20\xe3\x82\x9a"},
    {0x309F, "\xe3\x82\x88\xe3\x82\x8a"},
    {0x30FF, "\xe3\x82\xb3\xe3\x83\x88"},
    {0x3131, "\xe1\x84\x80"},
    {0x3132, "\xe1\x84\x81"},
    {0x3133, "\xe1\x86\xaa"},
    {0x3134, "\xe1\x84\x82"},
    {0x3135, "\xe1\x86\xac"},
    {0x3136, "\xe1\x86\xad"},
    {0x3137, "\xe1\x84\x83"},
    {0x3138, "\xe1\x84\x84"},
    {0x3139, "\xe1\x84\x85"},
    {0x313A, "\xe1\x86\xb0"},
    {0x313B, "\xe1\x86\xb1"},
    {0x313C, "\xe1\x86\xb2"},
    {0x313D, "\xe1\x86\xb3"},
    {0x313E, "\xe1\x86\xb4"},
    {0x313F, "\xe1\x86\xb5"},
    {0x3140, "\xe1\x84\x9a"},
    {0x3141, "\xe1\x84\x86"},
    {0x3142, "\xe1\x84\x87"},
    {0x3143, "\xe1\x84\x88"},
    {0x3144, "\xe1\x84\xa1"},
    {0x3145, "\xe1\x84\x89"},
    {0x3146, "\xe1\x84\x8a"},
    {0x3147, "\xe1\x84\x8b"},
    {0x3148, "\xe1\x84\x8c"},
    {0x3149, "\xe1\x84\x8d"},
    {0x314A, "\xe1\x84\x8e"},
    {0x314B, "\xe1\x84\x8f"},
    {0x314C, "\xe1\x84\x90"},
    {0x314D, "\xe1\x84\x91"},
    {0x314E, "\xe1\x84\x92"},
    {0x314F, "\xe1\x85\xa1"},
    {0x3150, "\xe1\x85\xa2"},
    {0x3151, "\xe1\x85\xa3"},
    {0x3152, "\xe1\x85\xa4"},
    {0x3153, "\xe1\x85\xa5"},
    {0x3154, "\xe1\x85\xa6"},
    {0x3155, "\xe1\x85\xa7"},
    {0x3156, "\xe1\x85\xa8"},
    {0x3157, "\xe1\x85\xa9"},
    {0x3158, "\xe1\x85\xaa"},
    {0x3159, "\xe1\x85\xab"},
    {0x315A, "\xe1\x85\xac"},
    {0x315B, "\xe1\x85\xad"},
    {0x315C, "\xe1\x85\xae"},
    {0x315D, "\xe1\x85\xaf"},
    {0x315E, "\xe1\x85\xb0"},
    {0x315F, "\xe1\x85\xb1"},
    {0x3160, "\xe1\x85\xb2"},
    {0x3161, "\xe1\x85\xb3"},
    {0x3162, "\xe1\x85\xb4"},
    {0x3163, "\xe1\x85\xb5"},
    {0x3164, "\xe1\x85\xa0"},
    {0x3165, "\xe1\x84\x94"},
    {0x3166, "\xe1\x84\x95"},
    {0x3167, "\xe1\x87\x87"},
    {0x3168, "\xe1\x87\x88"},
    {0x3169, "\xe1\x87\x8c"},
    {0x316A, "\xe1\x87\x8e"},
    {0x316B, "\xe1\x87\x93"},
    {0x316C, "\xe1\x87\x97"},
    {0x316D, "\xe1\x87\x99"},
    {0x316E, "\xe1\x84\x9c"},
    {0x316F, "\xe1\x87\x9d"},
    {0x3170, "\xe1\x87\x9f"},
    {0x3171, "\xe1\x84\x9d"},
    {0x3172, "\xe1\x84\x9e"},
    {0x3173, "\xe1\x84\xa0"},
    {0x3174, "\xe1\x84\xa2"},
    {0x3175, "\xe1\x84\xa3"},
    {0x3176, "\xe1\x84\xa7"},
    {0x3177, "\xe1\x84\xa9"},
    {0x3178, "\xe1\x84\xab"},
    {0x3179, "\xe1\x84\xac"},
    {0x317A, "\xe1\x84\xad"},
    {0x317B, "\xe1\x84\xae"},
    {0x317C, "\xe1\x84\xaf"},
    {0x317D, "\xe1\x84\xb2"},
    {0x317E, "\xe1\x84\xb6"},
    {0x317F, "\xe1\x85\x80"},
    {0x3180, "\xe1\x85\x87"},
    {0x3181, "\xe1\x85\x8c"},
    {0x3182, "\xe1\x87\xb1"},
    {0x3183, "\xe1\x87\xb2"},
    {0x3184, "\xe1\x85\x97"},
    {0x3185, "\xe1\x85\x98"},
    {0x3186, "\xe1\x85\x99"},
    {0x3187, "\xe1\x86\x84"},
    {0x3188, "\xe1\x86\x85"},
    {0x3189, "\xe1\x86\x88"},
    {0x318A, "\xe1\x86\x91"},
    {0x318B, "\xe1\x86\x92"},
    {0x318C, "\xe1\x86\x94"},
    {0x318D, "\xe1\x86\x9e"},
    {0x318E, "\xe1\x86\xa1"},
    {0x3192, "\xe4\xb8\x80"},
    {0x3193, "\xe4\xba\x8c"},
    {0x3194, "\xe4\xb8\x89"},
    {0x3195, "\xe5\x9b\x9b"},
    {0x3196, "\xe4\xb8\x8a"},
    {0x3197, "\xe4\xb8\xad"},
    {0x3198, "\xe4\xb8\x8b"},
    {0x3199, "\xe7\x94\xb2"},
    {0x319A, "\xe4\xb9\x99"},
    {0x319B, "\xe4\xb8\x99"},
    {0x319C, "\xe4\xb8\x81"},
    {0x319D, "\xe5\xa4\xa9"},
    {0x319E, "\xe5\x9c\xb0"},
    {0x319F, "\xe4\xba\xba"},
    {0x3200, "\x28\xe1\x84\x80\x29"},
    {0x3201, "\x28\xe1\x84\x82\x29"},
    {0x3202, "\x28\xe1\x84\x83\x29"},
    {0x3203, "\x28\xe1\x84\x85\x29"},
    {0x3204, "\x28\xe1\x84\x86\x29"},
    {0x3205, "\x28\xe1\x84\x87\x29"},
    {0x3206, "\x28\xe1\x84\x89\x29"},
    {0x3207, "\x28\xe1\x84\x8b\x29"},
    {0x3208, "\x28\xe1\x84\x8c\x29"},
    {0x3209, "\x28\xe1\x84\x8e\x29"},
    {0x320A, "\x28\xe1\x84\x8f\x29"},
    {0x320B, "\x28\xe1\x84\x90\x29"},
    {0x320C, "\x28\xe1\x84\x91\x29"},
    {0x320D, "\x28\xe1\x84\x92\x29"},
    {0x320E, "\x28\xea\xb0\x80\x29"},
    {0x320F, "\x28\xeb\x82\x98\x29"},
    {0x3210, "\x28\xeb\x8b\xa4\x29"},
    {0x3211, "\x28\xeb\x9d\xbc\x29"},
    {0x3212, "\x28\xeb\xa7\x88\x29"},
    {0x3213, "\x28\xeb\xb0\x94\x29"},
    {0x3214, "\x28\xec\x82\xac\x29"},
    {0x3215, "\x28\xec\x95\x84\x29"},
    {0x3216, "\x28\xec\x9e\x90\x29"},
    {0x3217, "\x28\xec\xb0\xa8\x29"},
    {0x3218, "\x28\xec\xb9\xb4\x29"},
    {0x3219, "\x28\xed\x83\x80\x29"},
    {0x321A, "\x28\xed\x8c\x8c\x29"},
    {0x321B, "\x28\xed\x95\x98\x29"},
    {0x321C, "\x28\xec\xa3\xbc\x29"},
    {0x321D, "\x28\xec\x98\xa4\xec\xa0\x84\x29"},
    {0x321E, "\x28\xec\x98\xa4\xed\x9b\x84\x29"},
    {0x3220, "\x28\xe4\xb8\x80\x29"},
    {0x3221, "\x28\xe4\xba\x8c\x29"},
    {0x3222, "\x28\xe4\xb8\x89\x29"},
    {0x3223, "\x28\xe5\x9b\x9b\x29"},
    {0x3224, "\x28\xe4\xba\x94\x29"},
    {0x3225, "\x28\xe5\x85\xad\x29"},
    {0x3226, "\x28\xe4\xb8\x83\x29"},
    {0x3227, "\x28\xe5\x85\xab\x29"},
    {0x3228, "\x28\xe4\xb9\x9d\x29"},
    {0x3229, "\x28\xe5\x8d\x81\x29"},
    {0x322A, "\x28\xe6\x9c\x88\x29"},
    {0x322B, "\x28\xe7\x81\xab\x29"},
    {0x322C, "\x28\xe6\xb0\xb4\x29"},
    {0x322D, "\x28\xe6\x9c\xa8\x29"},
    {0x322E, "\x28\xe9\x87\x91\x29"},
    {0x322F, "\x28\xe5\x9c\x9f\x29"},
    {0x3230, "\x28\xe6\x97\xa5\x29"},
    {0x3231, "\x28\xe6\xa0\xaa\x29"},
    {0x3232, "\x28\xe6\x9c\x89\x29"},
    {0x3233, "\x28\xe7\xa4\xbe\x29"},
    {0x3234, "\x28\xe5\x90\x8d\x29"},
    {0x3235, "\x28\xe7\x89\xb9\x29"},
    {0x3236, "\x28\xe8\xb2\xa1\x29"},
    {0x3237, "\x28\xe7\xa5\x9d\x29"},
    {0x3238, "\x28\xe5\x8a\xb4\x29"},
    {0x3239, "\x28\xe4\xbb\xa3\x29"},
    {0x323A, "\x28\xe5\x91\xbc\x29"},
    {0x323B, "\x28\xe5\xad\xa6\x29"},
    {0x323C, "\x28\xe7\x9b\xa3\x29"},
    {0x323D, "\x28\xe4\xbc\x81\x29"},
    {0x323E, "\x28\xe8\xb3\x87\x29"},
    {0x323F, "\x28\xe5\x8d\x94\x29"},
    {0x3240, "\x28\xe7\xa5\xad\x29"},
    {0x3241, "\x28\xe4\xbc\x91\x29"},
    {0x3242, "\x28\xe8\x87\xaa\x29"},
    {0x3243, "\x28\xe8\x87\xb3\x29"},
    {0x3244, "\xe5\x95\x8f"},
    {0x3245, "\xe5\xb9\xbc"},
    {0x3246, "\xe6\x96\x87"},
    {0x3247, "\xe7\xae\x8f"},
    {0x3250, "\x50\x54\x45"},
    {0x3251, "\x32\x31"},
    {0x3252, "\x32\x32"},
    {0x3253, "\x32\x33"},
    {0x3254, "\x32\x34"},
    {0x3255, "\x32\x35"},
    {0x3256, "\x32\x36"},
    {0x3257, "\x32\x37"},
    {0x3258, "\x32\x38"},
    {0x3259, "\x32\x39"},
    {0x325A, "\x33\x30"},
    {0x325B, "\x33\x31"},
    {0x325C, "\x33\x32"},
    {0x325D, "\x33\x33"},
    {0x325E, "\x33\x34"},
    {0x325F, "\x33\x35"},
    {0x3260, "\xe1\x84\x80"},
    {0x3261, "\xe1\x84\x82"},
    {0x3262, "\xe1\x84\x83"},
    {0x3263, "\xe1\x84\x85"},
    {0x3264, "\xe1\x84\x86"},
    {0x3265, "\xe1\x84\x87"},
    {0x3266, "\xe1\x84\x89"},
    {0x3267, "\xe1\x84\x8b"},
    {0x3268, "\xe1\x84\x8c"},
    {0x3269, "\xe1\x84\x8e"},
    {0x326A, "\xe1\x84\x8f"},
    {0x326B, "\xe1\x84\x90"},
    {0x326C, "\xe1\x84\x91"},
    {0x326D, "\xe1\x84\x92"},
    {0x326E, "\xea\xb0\x80"},
    {0x326F, "\xeb\x82\x98"},
    {0x3270, "\xeb\x8b\xa4"},
    {0x3271, "\xeb\x9d\xbc"},
    {0x3272, "\xeb\xa7\x88"},
    {0x3273, "\xeb\xb0\x94"},
    {0x3274, "\xec\x82\xac"},
    {0x3275, "\xec\x95\x84"},
    {0x3276, "\xec\x9e\x90"},
    {0x3277, "\xec\xb0\xa8"},
    {0x3278, "\xec\xb9\xb4"},
    {0x3279, "\xed\x83\x80"},
    {0x327A, "\xed\x8c\x8c"},
    {0x327B, "\xed\x95\x98"},
    {0x327C, "\xec\xb0\xb8\xea\xb3\xa0"},
    {0x327D, "\xec\xa3\xbc\xec\x9d\x98"},
    {0x327E, "\xec\x9a\xb0"},
    {0x3280, "\xe4\xb8\x80"},
    {0x3281, "\xe4\xba\x8c"},
    {0x3282, "\xe4\xb8\x89"},
    {0x3283, "\xe5\x9b\x9b"},
    {0x3284, "\xe4\xba\x94"},
    {0x3285, "\xe5\x85\xad"},
    {0x3286, "\xe4\xb8\x83"},
    {0x3287, "\xe5\x85\xab"},
    {0x3288, "\xe4\xb9\x9d"},
    {0x3289, "\xe5\x8d\x81"},
    {0x328A, "\xe6\x9c\x88"},
    {0x328B, "\xe7\x81\xab"},
    {0x328C, "\xe6\xb0\xb4"},
    {0x328D, "\xe6\x9c\xa8"},
    {0x328E, "\xe9\x87\x91"},
    {0x328F, "\xe5\x9c\x9f"},
    {0x3290, "\xe6\x97\xa5"},
    {0x3291, "\xe6\xa0\xaa"},
    {0x3292, "\xe6\x9c\x89"},
    {0x3293, "\xe7\xa4\xbe"},
    {0x3294, "\xe5\x90\x8d"},
    {0x3295, "\xe7\x89\xb9"},
    {0x3296, "\xe8\xb2\xa1"},
    {0x3297, "\xe7\xa5\x9d"},
    {0x3298, "\xe5\x8a\xb4"},
    {0x3299, "\xe7\xa7\x98"},
    {0x329A, "\xe7\x94\xb7"},
    {0x329B, "\xe5\xa5\xb3"},
    {0x329C, "\xe9\x81\xa9"},
    {0x329D, "\xe5\x84\xaa"},
    {0x329E, "\xe5\x8d\xb0"},
    {0x329F, "\xe6\xb3\xa8"},
    {0x32A0, "\xe9\xa0\x85"},
    {0x32A1, "\xe4\xbc\x91"},
    {0x32A2, "\xe5\x86\x99"},
    {0x32A3, "\xe6\xad\xa3"},
    {0x32A4, "\xe4\xb8\x8a"},
    {0x32A5, "\xe4\xb8\xad"},
    {0x32A6, "\xe4\xb8\x8b"},
    {0x32A7, "\xe5\xb7\xa6"},
    {0x32A8, "\xe5\x8f\xb3"},
    {0x32A9, "\xe5\x8c\xbb"},
    {0x32AA, "\xe5\xae\x97"},
    {0x32AB, "\xe5\xad\xa6"},
    {0x32AC, "\xe7\x9b\xa3"},
    {0x32AD, "\xe4\xbc\x81"},
    {0x32AE, "\xe8\xb3\x87"},
    {0x32AF, "\xe5\x8d\x94"},
    {0x32B0, "\xe5\xa4\x9c"},
    {0x32B1, "\x33\x36"},
    {0x32B2, "\x33\x37"},
    {0x32B3, "\x33\x38"},
    {0x32B4, "\x33\x39"},
    {0x32B5, "\x34\x30"},
    {0x32B6, "\x34\x31"},
    {0x32B7, "\x34\x32"},
    {0x32B8, "\x34\x33"},
    {0x32B9, "\x34\x34"},
    {0x32BA, "\x34\x35"},
    {0x32BB, "\x34\x36"},
    {0x32BC, "\x34\x37"},
    {0x32BD, "\x34\x38"},
    {0x32BE, "\x34\x39"},
    {0x32BF, "\x35\x30"},
    {0x32C0, "\x31\xe6\x9c\x88"},
    {0x32C1, "\x32\xe6\x9c\x88"},
    {0x32C2, "\x33\xe6\x9c\x88"},
    {0x32C3, "\x34\xe6\x9c\x88"},
    {0x32C4, "\x35\xe6\x9c\x88"},
    {0x32C5, "\x36\xe6\x9c\x88"},
    {0x32C6, "\x37\xe6\x9c\x88"},
    {0x32C7, "\x38\xe6\x9c\x88"},
    {0x32C8, "\x39\xe6\x9c\x88"},
    {0x32C9, "\x31\x30\xe6\x9c\x88"},
    {0x32CA, "\x31\x31\xe6\x9c\x88"},
    {0x32CB, "\x31\x32\xe6\x9c\x88"},
    {0x32CC, "\x48\x67"},
    {0x32CD, "\x65\x72\x67"},
    {0x32CE, "\x65\x56"},
    {0x32CF, "\x4c\x54\x44"},
    {0x32D0, "\xe3\x82\xa2"},
    {0x32D1, "\xe3\x82\xa4"},
    {0x32D2, "\xe3\x82\xa6"},
    {0x32D3, "\xe3\x82\xa8"},
    {0x32D4, "\xe3\x82\xaa"},
    {0x32D5, "\xe3\x82\xab"},
    {0x32D6, "\xe3\x82\xad"},
    {0x32D7, "\xe3\x82\xaf"},
    {0x32D8, "\xe3\x82\xb1"},
    {0x32D9, "\xe3\x82\xb3"},
    {0x32DA, "\xe3\x82\xb5"},
    {0x32DB, "\xe3\x82\xb7"},
    {0x32DC, "\xe3\x82\xb9"},
    {0x32DD, "\xe3\x82\xbb"},
    {0x32DE, "\xe3\x82\xbd"},
    {0x32DF, "\xe3\x82\xbf"},
    {0x32E0, "\xe3\x83\x81"},
    {0x32E1, "\xe3\x83\x84"},
    {0x32E2, "\xe3\x83\x86"},
    {0x32E3, "\xe3\x83\x88"},
    {0x32E4, "\xe3\x83\x8a"},
    {0x32E5, "\xe3\x83\x8b"},
    {0x32E6, "\xe3\x83\x8c"},
    {0x32E7, "\xe3\x83\x8d"},
    {0x32E8, "\xe3\x83\x8e"},
    {0x32E9, "\xe3\x83\x8f"},
    {0x32EA, "\xe3\x83\x92"},
    {0x32EB, "\xe3\x83\x95"},
    {0x32EC, "\xe3\x83\x98"},
    {0x32ED, "\xe3\x83\x9b"},
    {0x32EE, "\xe3\x83\x9e"},
    {0x32EF, "\xe3\x83\x9f"},
    {0x32F0, "\xe3\x83\xa0"},
    {0x32F1, "\xe3\x83\xa1"},
    {0x32F2, "\xe3\x83\xa2"},
    {0x32F3, "\xe3\x83\xa4"},
    {0x32F4, "\xe3\x83\xa6"},
    {0x32F5, "\xe3\x83\xa8"},
    {0x32F6, "\xe3\x83\xa9"},
    {0x32F7, "\xe3\x83\xaa"},
    {0x32F8, "\xe3\x83\xab"},
    {0x32F9, "\xe3\x83\xac"},
    {0x32FA, "\xe3\x83\xad"},
    {0x32FB, "\xe3\x83\xaf"},
    {0x32FC, "\xe3\x83\xb0"},
    {0x32FD, "\xe3\x83\xb1"},
    {0x32FE, "\xe3\x83\xb2"},
    {0x32FF, "\xe4\xbb\xa4\xe5\x92\x8c"},
    {0x3300, "\xe3\x82\xa2\xe3\x83\x91\xe3\x83\xbc\xe3\x83\x88"},
    {0x3301, "\xe3\x82\xa2\xe3\x83\xab\xe3\x83\x95\xe3\x82\xa1"},
    {0x3302, "\xe3\x82\xa2\xe3\x83\xb3\xe3\x83\x9a\xe3\x82\xa2"},
    {0x3303, "\xe3\x82\xa2\xe3\x83\xbc\xe3\x83\xab"},
    {0x3304, "\xe3\x82\xa4\xe3\x83\x8b\xe3\x83\xb3\xe3\x82\xb0"},
    {0x3305, "\xe3\x82\xa4\xe3\x83\xb3\xe3\x83\x81"},
    {0x3306, "\xe3\x82\xa6\xe3\x82\xa9\xe3\x83\xb3"},
    {0x3307, "\xe3\x82\xa8\xe3\x82\xb9\xe3\x82\xaf\xe3\x83\xbc\xe3\x83\x89"},
    {0x3308, "\xe3\x82\xa8\xe3\x83\xbc\xe3\x82\xab\xe3\x83\xbc"},
    {0x3309, "\xe3\x82\xaa\xe3\x83\xb3\xe3\x82\xb9"},
    {0x330A, "\xe3\x82\xaa\xe3\x83\xbc\xe3\x83\xa0"},
    {0x330B, "\xe3\x82\xab\xe3\x82\xa4\xe3\x83\xaa"},
    {0x330C, "\xe3\x82\xab\xe3\x83\xa9\xe3\x83\x83\xe3\x83\x88"},
    {0x330D, "\xe3\x82\xab\xe3\x83\xad\xe3\x83\xaa\xe3\x83\xbc"},
    {0x330E, "\xe3\x82\xac\xe3\x83\xad\xe3\x83\xb3"},
    {0x330F, "\xe3\x82\xac\xe3\x83\xb3\xe3\x83\x9e"},
    {0x3310, "\xe3\x82\xae\xe3\x82\xac"},
    {0x3311, "\xe3\x82\xae\xe3\x83\x8b\xe3\x83\xbc"},
    {0x3312, "\xe3\x82\xad\xe3\x83\xa5\xe3\x83\xaa\xe3\x83\xbc"},
    {0x3313, "\xe3\x82\xae\xe3\x83\xab\xe3\x83\x80\xe3\x83\xbc"},
    {0x3314, "\xe3\x82\xad\xe3\x83\xad"},
    {0x3315, "\xe3\x82\xad\xe3\x83\xad\xe3\x82\xb0\xe3\x83\xa9\xe3\x83\xa0"},
    {0x3316, "\xe3\x82\xad\xe3\x83\xad\xe3\x83\xa1\xe3\x83\xbc\xe3\x83\x88\xe3\x83\xab"},
    {0x3317, "\xe3\x82\xad\xe3\x83\xad\xe3\x83\xaf\xe3\x83\x83\xe3\x83\x88"},
    {0x3318, "\xe3\x82\xb0\xe3\x83\xa9\xe3\x83\xa0"},
    {0x3319, "\xe3\x82\xb0\xe3\x83\xa9\xe3\x83\xa0\xe3\x83\x88\xe3\x83\xb3"},
    {0x331A, "\xe3\x82\xaf\xe3\x83\xab\xe3\x82\xbc\xe3\x82\xa4\xe3\x83\xad"},
    {0x331B, "\xe3\x82\xaf\xe3\x83\xad\xe3\x83\xbc\xe3\x83\x8d"},
    {0x331C, "\xe3\x82\xb1\xe3\x83\xbc\xe3\x82\xb9"},
    {0x331D, "\xe3\x82\xb3\xe3\x83\xab\xe3\x83\x8a"},
    {0x331E, "\xe3\x82\xb3\xe3\x83\xbc\xe3\x83\x9d"},
    {0x331F, "\xe3\x82\xb5\xe3\x82\xa4\xe3\x82\xaf\xe3\x83\xab"},
    {0x3320, "\xe3\x82\xb5\xe3\x83\xb3\xe3\x83\x81\xe3\x83\xbc\xe3\x83\xa0"},
    {0x3321, "\xe3\x82\xb7\xe3\x83\xaa\xe3\x83\xb3\xe3\x82\xb0"},
    {0x3322, "\xe3\x82\xbb\xe3\x83\xb3\xe3\x83\x81"},
    {0x3323, "\xe3\x82\xbb\xe3\x83\xb3\xe3\x83\x88"},
    {0x3324, "\xe3\x83\x80\xe3\x83\xbc\xe3\x82\xb9"},
    {0x3325, "\xe3\x83\x87\xe3\x82\xb7"},
    {0x3326, "\xe3\x83\x89\xe3\x83\xab"},
    {0x3327, "\xe3\x83\x88\xe3\x83\xb3"},
    {0x3328, "\xe3\x83\x8a\xe3\x83\x8e"},
    {0x3329, "\xe3\x83\x8e\xe3\x83\x83\xe3\x83\x88"},
    {0x332A, "\xe3\x83\x8f\xe3\x82\xa4\xe3\x83\x84"},
    {0x332B, "\xe3\x83\x91\xe3\x83\xbc\xe3\x82\xbb\xe3\x83\xb3\xe3\x83\x88"},
    {0x332C, "\xe3\x83\x91\xe3\x83\xbc\xe3\x83\x84"},
    {0x332D, "\xe3\x83\x90\xe3\x83\xbc\xe3\x83\xac\xe3\x83\xab"},
    {0x332E, "\xe3\x83\x94\xe3\x82\xa2\xe3\x82\xb9\xe3\x83\x88\xe3\x83\xab"},
    {0x332F, "\xe3\x83\x94\xe3\x82\xaf\xe3\x83\xab"},
    {0x3330, "\xe3\x83\x94\xe3\x82\xb3"},
    {0x3331, "\xe3\x83\x93\xe3\x83\xab"},
    {0x3332, "\xe3\x83\x95\xe3\x82\xa1\xe3\x83\xa9\xe3\x83\x83\xe3\x83\x89"},
    {0x3333, "\xe3\x83\x95\xe3\x82\xa3\xe3\x83\xbc\xe3\x83\x88"},
    {0x3334, "\xe3\x83\x96\xe3\x83\x83\xe3\x82\xb7\xe3\x82\xa7\xe3\x83\xab"},
    {0x3335, "\xe3\x83\x95\xe3\x83\xa9\xe3\x83\xb3"},
    {0x3336, "\xe3\x83\x98\xe3\x82\xaf\xe3\x82\xbf\xe3\x83\xbc\xe3\x83\xab"},
    {0x3337, "\xe3\x83\x9a\xe3\x82\xbd"},
    {0x3338, "\xe3\x83\x9a\xe3\x83\x8b\xe3\x83\x92"},
    {0x3339, "\xe3\x83\x98\xe3\x83\xab\xe3\x83\x84"},
    {0x333A, "\xe3\x83\x9a\xe3\x83\xb3\xe3\x82\xb9"},
    {0x333B, "\xe3\x83\x9a\xe3\x83\xbc\xe3\x82\xb8"},
    {0x333C, "\xe3\x83\x99\xe3\x83\xbc\xe3\x82\xbf"},
    {0x333D, "\xe3\x83\x9d\xe3\x82\xa4\xe3\x83\xb3\xe3\x83\x88"},
    {0x333E, "\xe3\x83\x9c\xe3\x83\xab\xe3\x83\x88"},
    {0x333F, "\xe3\x83\x9b\xe3\x83\xb3"},
    {0x3340, "\xe3\x83\x9d\xe3\x83\xb3\xe3\x83\x89"},
    {0x3341, "\xe3\x83\x9b\xe3\x83\xbc\xe3\x83\xab"},
    {0x3342, "\xe3\x83\x9b\xe3\x83\xbc\xe3\x83\xb3"},
    {0x3343, "\xe3\x83\x9e\xe3\x82\xa4\xe3\x82\xaf\xe3\x83\xad"},
    {0x3344, "\xe3\x83\x9e\xe3\x82\xa4\xe3\x83\xab"},
    {0x3345, "\xe3\x83\x9e\xe3\x83\x83\xe3\x83\x8f"},
    {0x3346, "\xe3\x83\x9e\xe3\x83\xab\xe3\x82\xaf"},
    {0x3347, "\xe3\x83\x9e\xe3\x83\xb3\xe3\x82\xb7\xe3\x83\xa7\xe3\x83\xb3"},
    {0x3348, "\xe3\x83\x9f\xe3\x82\xaf\xe3\x83\xad\xe3\x83\xb3"},
    {0x3349, "\xe3\x83\x9f\xe3\x83\xaa"},
    {0x334A, "\xe3\x83\x9f\xe3\x83\xaa\xe3\x83\x90\xe3\x83\xbc\xe3\x83\xab"},
    {0x334B, "\xe3\x83\xa1\xe3\x82\xac"},
    {0x334C, "\xe3\x83\xa1\xe3\x82\xac\xe3\x83\x88\xe3\x83\xb3"},
    {0x334D, "\xe3\x83\xa1\xe3\x83\xbc\xe3\x83\x88\xe3\x83\xab"},
    {0x334E, "\xe3\x83\xa4\xe3\x83\xbc\xe3\x83\x89"},
    {0x334F, "\xe3\x83\xa4\xe3\x83\xbc\xe3\x83\xab"},
    {0x3350, "\xe3\x83\xa6\xe3\x82\xa2\xe3\x83\xb3"},
    {0x3351, "\xe3\x83\xaa\xe3\x83\x83\xe3\x83\x88\xe3\x83\xab"},
    {0x3352, "\xe3\x83\xaa\xe3\x83\xa9"},
    {0x3353, "\xe3\x83\xab\xe3\x83\x94\xe3\x83\xbc"},
    {0x3354, "\xe3\x83\xab\xe3\x83\xbc\xe3\x83\x96\xe3\x83\xab"},
    {0x3355, "\xe3\x83\xac\xe3\x83\xa0"},
    {0x3356, "\xe3\x83\xac\xe3\x83\xb3\xe3\x83\x88\xe3\x82\xb2\xe3\x83\xb3"},
    {0x3357, "\xe3\x83\xaf\xe3\x83\x83\xe3\x83\x88"},
    {0x3358, "\x30\xe7\x82\xb9"},
    {0x3359, "\x31\xe7\x82\xb9"},
    {0x335A, "\x32\xe7\x82\xb9"},
    {0x335B, "\x33\xe7\x82\xb9"},
    {0x335C, "\x34\xe7\x82\xb9"},
    {0x335D, "\x35\xe7\x82\xb9"},
    {0x335E, "\x36\xe7\x82\xb9"},
    {0x335F, "\x37\xe7\x82\xb9"},
    {0x3360, "\x38\xe7\x82\xb9"},
    {0x3361, "\x39\xe7\x82\xb9"},
    {0x3362, "\x31\x30\xe7\x82\xb9"},
    {0x3363, "\x31\x31\xe7\x82\xb9"},
    {0x3364, "\x31\x32\xe7\x82\xb9"},
    {0x3365, "\x31\x33\xe7\x82\xb9"},
    {0x3366, "\x31\x34\xe7\x82\xb9"},
    {0x3367, "\x31\x35\xe7\x82\xb9"},
    {0x3368, "\x31\x36\xe7\x82\xb9"},
    {0x3369, "\x31\x37\xe7\x82\xb9"},
    {0x336A, "\x31\x38\xe7\x82\xb9"},
    {0x336B, "\x31\x39\xe7\x82\xb9"},
    {0x336C, "\x32\x30\xe7\x82\xb9"},
    {0x336D, "\x32\x31\xe7\x82\xb9"},
    {0x336E, "\x32\x32\xe7\x82\xb9"},
    {0x336F, "\x32\x33\xe7\x82\xb9"},
    {0x3370, "\x32\x34\xe7\x82\xb9"},
    {0x3371, "\x68\x50\x61"},
    {0x3372, "\x64\x61"},
    {0x3373, "\x41\x55"},
    {0x3374, "\x62\x61\x72"},
    {0x3375, "\x6f\x56"},
    {0x3376, "\x70\x63"},
    {0x3377, "\x64\x6d"},
    {0x3378, "\x64\x6d\x32"},
    {0x3379, "\x64\x6d\x33"},
    {0x337A, "\x49\x55"},
    {0x337B, "\xe5\xb9\xb3\xe6\x88\x90"},
    {0x337C, "\xe6\x98\xad\xe5\x92\x8c"},
    {0x337D, "\xe5\xa4\xa7\xe6\xad\xa3"},
    {0x337E, "\xe6\x98\x8e\xe6\xb2\xbb"},
    {0x337F, "\xe6\xa0\xaa\xe5\xbc\x8f\xe4\xbc\x9a\xe7\xa4\xbe"},
    {0x3380, "\x70\x41"},
    {0x3381, "\x6e\x41"},
    {0x3382, "\xce\xbc\x41"},
    {0x3383, "\x6d\x41"},
    {0x3384, "\x6b\x41"},
    {0x3385, "\x4b\x42"},
    {0x3386, "\x4d\x42"},
    {0x3387, "\x47\x42"},
    {0x3388, "\x63\x61\x6c"},
    {0x3389, "\x6b\x63\x61\x6c"},
    {0x338A, "\x70\x46"},
    {0x338B, "\x6e\x46"},
    {0x338C, "\xce\xbc\x46"},
    {0x338D, "\xce\xbc\x67"},
    {0x338E, "\x6d\x67"},
    {0x338F, "\x6b\x67"},
    {0x3390, "\x48\x7a"},
    {0x3391, "\x6b\x48\x7a"},
    {0x3392, "\x4d\x48\x7a"},
    {0x3393, "\x47\x48\x7a"},
    {0x3394, "\x54\x48\x7a"},
    {0x3395, "\xce\xbc\x6c"},
    {0x3396, "\x6d\x6c"},
    {0x3397, "\x64\x6c"},
    {0x3398, "\x6b\x6c"},
    {0x3399, "\x66\x6d"},
    {0x339A, "\x6e\x6d"},
    {0x339B, "\xce\xbc\x6d"},
    {0x339C, "\x6d\x6d"},
    {0x339D, "\x63\x6d"},
    {0x339E, "\x6b\x6d"},
    {0x339F, "\x6d\x6d\x32"},
    {0x33A0, "\x63\x6d\x32"},
    {0x33A1, "\x6d\x32"},
    {0x33A2, "\x6b\x6d\x32"},
    {0x33A3, "\x6d\x6d\x33"},
    {0x33A4, "\x63\x6d\x33"},
    {0x33A5, "\x6d\x33"},
    {0x33A6, "\x6b\x6d\x33"},
    {0x33A7, "\x6d\xe2\x88\x95\x73"},
    {0x33A8, "\x6d\xe2\x88\x95\x73\x32"},
    {0x33A9, "\x50\x61"},
    {0x33AA, "\x6b\x50\x61"},
    {0x33AB, "\x4d\x50\x61"},
    {0x33AC, "\x47\x50\x61"},
    {0x33AD, "\x72\x61\x64"},
    {0x33AE, "\x72\x61\x64\xe2\x88\x95\x73"},
    {0x33AF, "\x72\x61\x64\xe2\x88\x95\x73\x32"},
    {0x33B0, "\x70\x73"},
    {0x33B1, "\x6e\x73"},
    {0x33B2, "\xce\xbc\x73"},
    {0x33B3, "\x6d\x73"},
    {0x33B4, "\x70\x56"},
    {0x33B5, "\x6e\x56"},
    {0x33B6, "\xce\xbc\x56"},
    {0x33B7, "\x6d\x56"},
    {0x33B8, "\x6b\x56"},
    {0x33B9, "\x4d\x56"},
    {0x33BA, "\x70\x57"},
    {0x33BB, "\x6e\x57"},
    {0x33BC, "\xce\xbc\x57"},
    {0x33BD, "\x6d\x57"},
    {0x33BE, "\x6b\x57"},
    {0x33BF, "\x4d\x57"},
    {0x33C0, "\x6b\xce\xa9"},
    {0x33C1, "\x4d\xce\xa9"},
    {0x33C2, "\x61\x2e\x6d\x2e"},
    {0x33C3, "\x42\x71"},
    {0x33C4, "\x63\x63"},
    {0x33C5, "\x63\x64"},
    {0x33C6, "\x43\xe2\x88\x95\x6b\x67"},
    {0x33C7, "\x43\x6f\x2e"},
    {0x33C8, "\x64\x42"},
    {0x33C9, "\x47\x79"},
    {0x33CA, "\x68\x61"},
    {0x33CB, "\x48\x50"},
    {0x33CC, "\x69\x6e"},
    {0x33CD, "\x4b\x4b"},
    {0x33CE, "\x4b\x4d"},
    {0x33CF, "\x6b\x74"},
    {0x33D0, "\x6c\x6d"},
    {0x33D1, "\x6c\x6e"},
    {0x33D2, "\x6c\x6f\x67"},
    {0x33D3, "\x6c\x78"},
    {0x33D4, "\x6d\x62"},
    {0x33D5, "\x6d\x69\x6c"},
    {0x33D6, "\x6d\x6f\x6c"},
    {0x33D7, "\x50\x48"},
    {0x33D8, "\x70\x2e\x6d\x2e"},
    {0x33D9, "\x50\x50\x4d"},
    {0x33DA, "\x50\x52"},
    {0x33DB, "\x73\x72"},
    {0x33DC, "\x53\x76"},
    {0x33DD, "\x57\x62"},
    {0x33DE, "\x56\xe2\x88\x95\x6d"},
    {0x33DF, "\x41\xe2\x88\x95\x6d"},
    {0x33E0, "\x31\xe6\x97\xa5"},
    {0x33E1, "\x32\xe6\x97\xa5"},
    {0x33E2, "\x33\xe6\x97\xa5"},
    {0x33E3, "\x34\xe6\x97\xa5"},
    {0x33E4, "\x35\xe6\x97\xa5"},
    {0x33E5, "\x36\xe6\x97\xa5"},
    {0x33E6, "\x37\xe6\x97\xa5"},
    {0x33E7, "\x38\xe6\x97\xa5"},
    {0x33E8, "\x39\xe6\x97\xa5"},
    {0x33E9, "\x31\x30\xe6\x97\xa5"},
    {0x33EA, "\x31\x31\xe6\x97\xa5"},
    {0x33EB, "\x31\x32\xe6\x97\xa5"},
    {0x33EC, "\x31\x33\xe6\x97\xa5"},
    {0x33ED, "\x31\x34\xe6\x97\xa5"},
    {0x33EE, "\x31\x35\xe6\x97\xa5"},
    {0x33EF, "\x31\x36\xe6\x97\xa5"},
    {0x33F0, "\x31\x37\xe6\x97\xa5"},
    {0x33F1, "\x31\x38\xe6\x97\xa5"},
    {0x33F2, "\x31\x39\xe6\x97\xa5"},
    {0x33F3, "\x32\x30\xe6\x97\xa5"},
    {0x33F4, "\x32\x31\xe6\x97\xa5"},
    {0x33F5, "\x32\x32\xe6\x97\xa5"},
    {0x33F6, "\x32\x33\xe6\x97\xa5"},
    {0x33F7, "\x32\x34\xe6\x97\xa5"},
    {0x33F8, "\x32\x35\xe6\x97\xa5"},
    {0x33F9, "\x32\x36\xe6\x97\xa5"},
    {0x33FA, "\x32\x37\xe6\x97\xa5"},
    {0x33FB, "\x32\x38\xe6\x97\xa5"},
    {0x33FC, "\x32\x39\xe6\x97\xa5"},
    {0x33FD, "\x33\x30\xe6\x97\xa5"},
    {0x33FE, "\x33\x31\xe6\x97\xa5"},
    {0x33FF, "\x67\x61\x6c"},
    {0xA69C, "\xd1\x8a"},
    {0xA69D, "\xd1\x8c"},
    {0xA770, "\xea\x9d\xaf"},
    {0xA7F8, "\xc4\xa6"},
    {0xA7F9, "\xc5\x93"},
    {0xAB5C, "\xea\x9c\xa7"},
    {0xAB5D, "\xea\xac\xb7"},
    {0xAB5E, "\xc9\xab"},
    {0xAB5F, "\xea\xad\x92"},
    {0xAB69, "\xca\x8d"},
    {0xF900, "\xe8\xb1\x88"},
    {0xF901, "\xe6\x9b\xb4"},
    {0xF902, "\xe8\xbb\x8a"},
    {0xF903, "\xe8\xb3\x88"},
    {0xF904, "\xe6\xbb\x91"},
    {0xF905, "\xe4\xb8\xb2"},
    {0xF906, "\xe5\x8f\xa5"},
    {0xF907, "\xe9\xbe\x9c"},
    {0xF908, "\xe9\xbe\x9c"},
    {0xF909, "\xe5\xa5\x91"},
    {0xF90A, "\xe9\x87\x91"},
    {0xF90B, "\xe5\x96\x87"},
    {0xF90C, "\xe5\xa5\x88"},
    {0xF90D, "\xe6\x87\xb6"},
    {0xF90E, "\xe7\x99\xa9"},
    {0xF90F, "\xe7\xbe\x85"},
    {0xF910, "\xe8\x98\xbf"},
    {0xF911, "\xe8\x9e\xba"},
    {0xF912, "\xe8\xa3\xb8"},
    {0xF913, "\xe9\x82\x8f"},
    {0xF914, "\xe6\xa8\x82"},
    {0xF915, "\xe6\xb4\x9b"},
    {0xF916, "\xe7\x83\x99"},
    {0xF917, "\xe7\x8f\x9e"},
    {0xF918, "\xe8\x90\xbd"},
    {0xF919, "\xe9\x85\xaa"},
    {0xF91A, "\xe9\xa7\xb1"},
    {0xF91B, "\xe4\xba\x82"},
    {0xF91C, "\xe5\x8d\xb5"},
    {0xF91D, "\xe6\xac\x84"},
    {0xF91E, "\xe7\x88\x9b"},
    {0xF91F, "\xe8\x98\xad"},
    {0xF920, "\xe9\xb8\x9e"},
    {0xF921, "\xe5\xb5\x90"},
    {0xF922, "\xe6\xbf\xab"},
    {0xF923, "\xe8\x97\x8d"},
    {0xF924, "\xe8\xa5\xa4"},
    {0xF925, "\xe6\x8b\x89"},
    {0xF926, "\xe8\x87\x98"},
    {0xF927, "\xe8\xa0\x9f"},
    {0xF928, "\xe5\xbb\x8a"},
    {0xF929, "\xe6\x9c\x97"},
    {0xF92A, "\xe6\xb5\xaa"},
    {0xF92B, "\xe7\x8b\xbc"},
    {0xF92C, "\xe9\x83\x8e"},
    {0xF92D, "\xe4\xbe\x86"},
    {0xF92E, "\xe5\x86\xb7"},
    {0xF92F, "\xe5\x8b\x9e"},
    {0xF930, "\xe6\x93\x84"},
    {0xF931, "\xe6\xab\x93"},
    {0xF932, "\xe7\x88\x90"},
    {0xF933, "\xe7\x9b\xa7"},
    {0xF934, "\xe8\x80\x81"},
    {0xF935, "\xe8\x98\x86"},
    {0xF936, "\xe8\x99\x9c"},
    {0xF937, "\xe8\xb7\xaf"},
    {0xF938, "\xe9\x9c\xb2"},
    {0xF939, "\xe9\xad\xaf"},
    {0xF93A, "\xe9\xb7\xba"},
    {0xF93B, "\xe7\xa2\x8c"},
    {0xF93C, "\xe7\xa5\xbf"},
    {0xF93D, "\xe7\xb6\xa0"},
    {0xF93E, "\xe8\x8f\x89"},
    {0xF93F, "\xe9\x8c\x84"},
    {0xF940, "\xe9\xb9\xbf"},
    {0xF941, "\xe8\xab\x96"},
    {0xF942, "\xe5\xa3\x9f"},
    {0xF943, "\xe5\xbc\x84"},
    {0xF944, "\xe7\xb1\xa0"},
    {0xF945, "\xe8\x81\xbe"},
    {0xF946, "\xe7\x89\xa2"},
    {0xF947, "\xe7\xa3\x8a"},
    {0xF948, "\xe8\xb3\x82"},
    {0xF949, "\xe9\x9b\xb7"},
    {0xF94A, "\xe5\xa3\x98"},
    {0xF94B, "\xe5\xb1\xa2"},
    {0xF94C, "\xe6\xa8\x93"},
    {0xF94D, "\xe6\xb7\x9a"},
    {0xF94E, "\xe6\xbc\x8f"},
    {0xF94F, "\xe7\xb4\xaf"},
    {0xF950, "\xe7\xb8\xb7"},
    {0xF951, "\xe9\x99\x8b"},
    {0xF952, "\xe5\x8b\x92"},
    {0xF953, "\xe8\x82\x8b"},
    {0xF954, "\xe5\x87\x9c"},
    {0xF955, "\xe5\x87\x8c"},
    {0xF956, "\xe7\xa8\x9c"},
    {0xF957, "\xe7\xb6\xbe"},
    {0xF958, "\xe8\x8f\xb1"},
    {0xF959, "\xe9\x99\xb5"},
    {0xF95A, "\xe8\xae\x80"},
    {0xF95B, "\xe6\x8b\x8f"},
    {0xF95C, "\xe6\xa8\x82"},
    {0xF95D, "\xe8\xab\xbe"},
    {0xF95E, "\xe4\xb8\xb9"},
    {0xF95F, "\xe5\xaf\xa7"},
    {0xF960, "\xe6\x80\x92"},
    {0xF961, "\xe7\x8e\x87"},
    {0xF962, "\xe7\x95\xb0"},
    {0xF963, "\xe5\x8c\x97"},
    {0xF964, "\xe7\xa3\xbb"},
    {0xF965, "\xe4\xbe\xbf"},
    {0xF966, "\xe5\xbe\xa9"},
    {0xF967, "\xe4\xb8\x8d"},
    {0xF968, "\xe6\xb3\x8c"},
    {0xF969, "\xe6\x95\xb8"},
    {0xF96A, "\xe7\xb4\xa2"},
    {0xF96B, "\xe5\x8f\x83"},
    {0xF96C, "\xe5\xa1\x9e"},
    {0xF96D, "\xe7\x9c\x81"},
    {0xF96E, "\xe8\x91\x89"},
    {0xF96F, "\xe8\xaa\xaa"},
    {0xF970, "\xe6\xae\xba"},
    {0xF971, "\xe8\xbe\xb0"},
    {0xF972, "\xe6\xb2\x88"},
    {0xF973, "\xe6\x8b\xbe"},
    {0xF974, "\xe8\x8b\xa5"},
    {0xF975, "\xe6\x8e\xa0"},
    {0xF976, "\xe7\x95\xa5"},
    {0xF977, "\xe4\xba\xae"},
    {0xF978, "\xe5\x85\xa9"},
    {0xF979, "\xe5\x87\x89"},
    {0xF97A, "\xe6\xa2\x81"},
    {0xF97B, "\xe7\xb3\xa7"},
    {0xF97C, "\xe8\x89\xaf"},
    {0xF97D, "\xe8\xab\x92"},
    {0xF97E, "\xe9\x87\x8f"},
    {0xF97F, "\xe5\x8b\xb5"},
    {0xF980, "\xe5\x91\x82"},
    {0xF981, "\xe5\xa5\xb3"},
    {0xF982, "\xe5\xbb\xac"},
    {0xF983, "\xe6\x97\x85"},
    {0xF984, "\xe6\xbf\xbe"},
    {0xF985, "\xe7\xa4\xaa"},
    {0xF986, "\xe9\x96\xad"},
    {0xF987, "\xe9\xa9\xaa"},
    {0xF988, "\xe9\xba\x97"},
    {0xF989, "\xe9\xbb\x8e"},
    {0xF98A, "\xe5\x8a\x9b"},
    {0xF98B, "\xe6\x9b\x86"},
    {0xF98C, "\xe6\xad\xb7"},
    {0xF98D, "\xe8\xbd\xa2"},
    {0xF98E, "\xe5\xb9\xb4"},
    {0xF98F, "\xe6\x86\x90"},
    {0xF990, "\xe6\x88\x80"},
    {0xF991, "\xe6\x92\x9a"},
    {0xF992, "\xe6\xbc\xa3"},
    {0xF993, "\xe7\x85\x89"},
    {0xF994, "\xe7\x92\x89"},
    {0xF995, "\xe7\xa7\x8a"},
    {0xF996, "\xe7\xb7\xb4"},
    {0xF997, "\xe8\x81\xaf"},
    {0xF998, "\xe8\xbc\xa6"},
    {0xF999, "\xe8\x93\xae"},
    {0xF99A, "\xe9\x80\xa3"},
    {0xF99B, "\xe9\x8d\x8a"},
    {0xF99C, "\xe5\x88\x97"},
    {0xF99D, "\xe5\x8a\xa3"},
    {0xF99E, "\xe5\x92\xbd"},
    {0xF99F, "\xe7\x83\x88"},
    {0xF9A0, "\xe8\xa3\x82"},
    {0xF9A1, "\xe8\xaa\xaa"},
    {0xF9A2, "\xe5\xbb\x89"},
    {0xF9A3, "\xe5\xbf\xb5"},
    {0xF9A4, "\xe6\x8d\xbb"},
    {0xF9A5, "\xe6\xae\xae"},
    {0xF9A6, "\xe7\xb0\xbe"},
    {0xF9A7, "\xe7\x8d\xb5"},
    {0xF9A8, "\xe4\xbb\xa4"},
    {0xF9A9, "\xe5\x9b\xb9"},
    {0xF9AA, "\xe5\xaf\xa7"},
    {0xF9AB, "\xe5\xb6\xba"},
    {0xF9AC, "\xe6\x80\x9c"},
    {0xF9AD, "\xe7\x8e\xb2"},
    {0xF9AE, "\xe7\x91\xa9"},
    {0xF9AF, "\xe7\xbe\x9a"},
    {0xF9B0, "\xe8\x81\x86"},
    {0xF9B1, "\xe9\x88\xb4"},
    {0xF9B2, "\xe9\x9b\xb6"},
    {0xF9B3, "\xe9\x9d\x88"},
    {0xF9B4, "\xe9\xa0\x98"},
    {0xF9B5, "\xe4\xbe\x8b"},
    {0xF9B6, "\xe7\xa6\xae"},
    {0xF9B7, "\xe9\x86\xb4"},
    {0xF9B8, "\xe9\x9a\xb8"},
    {0xF9B9, "\xe6\x83\xa1"},
    {0xF9BA, "\xe4\xba\x86"},
    {0xF9BB, "\xe5\x83\x9a"},
    {0xF9BC, "\xe5\xaf\xae"},
    {0xF9BD, "\xe5\xb0\xbf"},
    {0xF9BE, "\xe6\x96\x99"},
    {0xF9BF, "\xe6\xa8\x82"},
    {0xF9C0, "\xe7\x87\x8e"},
    {0xF9C1, "\xe7\x99\x82"},
    {0xF9C2, "\xe8\x93\xbc"},
    {0xF9C3, "\xe9\x81\xbc"},
    {0xF9C4, "\xe9\xbe\x8d"},
    {0xF9C5, "\xe6\x9a\x88"},
    {0xF9C6, "\xe9\x98\xae"},
    {0xF9C7, "\xe5\x8a\x89"},
    {0xF9C8, "\xe6\x9d\xbb"},
    {0xF9C9, "\xe6\x9f\xb3"},
    {0xF9CA, "\xe6\xb5\x81"},
    {0xF9CB, "\xe6\xba\x9c"},
    {0xF9CC, "\xe7\x90\x89"},
    {0xF9CD, "\xe7\x95\x99"},
    {0xF9CE, "\xe7\xa1\xab"},
    {0xF9CF, "\xe7\xb4\x90"},
    {0xF9D0, "\xe9\xa1\x9e"},
    {0xF9D1, "\xe5\x85\xad"},
    {0xF9D2, "\xe6\x88\xae"},
    {0xF9D3, "\xe9\x99\xb8"},
    {0xF9D4, "\xe5\x80\xab"},
    {0xF9D5, "\xe5\xb4\x99"},
    {0xF9D6, "\xe6\xb7\xaa"},
    {0xF9D7, "\xe8\xbc\xaa"},
    {0xF9D8, "\xe5\xbe\x8b"},
    {0xF9D9, "\xe6\x85\x84"},
    {0xF9DA, "\xe6\xa0\x97"},
    {0xF9DB, "\xe7\x8e\x87"},
    {0xF9DC, "\xe9\x9a\x86"},
    {0xF9DD, "\xe5\x88\xa9"},
    {0xF9DE, "\xe5\x90\x8f"},
    {0xF9DF, "\xe5\xb1\xa5"},
    {0xF9E0, "\xe6\x98\x93"},
    {0xF9E1, "\xe6\x9d\x8e"},
    {0xF9E2, "\xe6\xa2\xa8"},
    {0xF9E3, "\xe6\xb3\xa5"},
    {0xF9E4, "\xe7\x90\x86"},
    {0xF9E5, "\xe7\x97\xa2"},
    {0xF9E6, "\xe7\xbd\xb9"},
    {0xF9E7, "\xe8\xa3\x8f"},
    {0xF9E8, "\xe8\xa3\xa1"},
    {0xF9E9, "\xe9\x87\x8c"},
    {0xF9EA, "\xe9\x9b\xa2"},
    {0xF9EB, "\xe5\x8c\xbf"},
    {0xF9EC, "\xe6\xba\xba"},
    {0xF9ED, "\xe5\x90\x9d"},
    {0xF9EE, "\xe7\x87\x90"},
    {0xF9EF, "\xe7\x92\x98"},
    {0xF9F0, "\xe8\x97\xba"},
    {0xF9F1, "\xe9\x9a\xa3"},
    {0xF9F2, "\xe9\xb1\x97"},
    {0xF9F3, "\xe9\xba\x9f"},
    {0xF9F4, "\xe6\x9e\x97"},
    {0xF9F5, "\xe6\xb7\x8b"},
    {0xF9F6, "\xe8\x87\xa8"},
    {0xF9F7, "\xe7\xab\x8b"},
    {0xF9F8, "\xe7\xac\xa0"},
    {0xF9F9, "\xe7\xb2\x92"},
    {0xF9FA, "\xe7\x8b\x80"},
    {0xF9FB, "\xe7\x82\x99"},
    {0xF9FC, "\xe8\xad\x98"},
    {0xF9FD, "\xe4\xbb\x80"},
    {0xF9FE, "\xe8\x8c\xb6"},
    {0xF9FF, "\xe5\x88\xba"},
    {0xFA00, "\xe5\x88\x87"},
    {0xFA01, "\xe5\xba\xa6"},
    {0xFA02, "\xe6\x8b\x93"},
    {0xFA03, "\xe7\xb3\x96"},
    {0xFA04, "\xe5\xae\x85"},
    {0xFA05, "\xe6\xb4\x9e"},
    {0xFA06, "\xe6\x9a\xb4"},
    {0xFA07, "\xe8\xbc\xbb"},
    {0xFA08, "\xe8\xa1\x8c"},
    {0xFA09, "\xe9\x99\x8d"},
    {0xFA0A, "\xe8\xa6\x8b"},
    {0xFA0B, "\xe5\xbb\x93"},
    {0xFA0C, "\xe5\x85\x80"},
    {0xFA0D, "\xe5\x97\x80"},
    {0xFA10, "\xe5\xa1\x9a"},
    {0xFA12, "\xe6\x99\xb4"},
    {0xFA15, "\xe5\x87\x9e"},
    {0xFA16, "\xe7\x8c\xaa"},
    {0xFA17, "\xe7\x9b\x8a"},
    {0xFA18, "\xe7\xa4\xbc"},
    {0xFA19, "\xe7\xa5\x9e"},
    {0xFA1A, "\xe7\xa5\xa5"},
    {0xFA1B, "\xe7\xa6\x8f"},
    {0xFA1C, "\xe9\x9d\x96"},
    {0xFA1D, "\xe7\xb2\xbe"},
    {0xFA1E, "\xe7\xbe\xbd"},
    {0xFA20, "\xe8\x98\x92"},
    {0xFA22, "\xe8\xab\xb8"},
    {0xFA25, "\xe9\x80\xb8"},
    {0xFA26, "\xe9\x83\xbd"},
    {0xFA2A, "\xe9\xa3\xaf"},
    {0xFA2B, "\xe9\xa3\xbc"},
    {0xFA2C, "\xe9\xa4\xa8"},
    {0xFA2D, "\xe9\xb6\xb4"},
    {0xFA2E, "\xe9\x83\x9e"},
    {0xFA2F, "\xe9\x9a\xb7"},
    {0xFA30, "\xe4\xbe\xae"},
    {0xFA31, "\xe5\x83\xa7"},
    {0xFA32, "\xe5\x85\x8d"},
    {0xFA33, "\xe5\x8b\x89"},
    {0xFA34, "\xe5\x8b\xa4"},
    {0xFA35, "\xe5\x8d\x91"},
    {0xFA36, "\xe5\x96\x9d"},
    {0xFA37, "\xe5\x98\x86"},
    {0xFA38, "\xe5\x99\xa8"},
    {0xFA39, "\xe5\xa1\x80"},
    {0xFA3A, "\xe5\xa2\xa8"},
    {0xFA3B, "\xe5\xb1\xa4"},
    {0xFA3C, "\xe5\xb1\xae"},
    {0xFA3D, "\xe6\x82\x94"},
    {0xFA3E, "\xe6\x85\xa8"},
    {0xFA3F, "\xe6\x86\x8e"},
    {0xFA40, "\xe6\x87\xb2"},
    {0xFA41, "\xe6\x95\x8f"},
    {0xFA42, "\xe6\x97\xa2"},
    {0xFA43, "\xe6\x9a\x91"},
    {0xFA44, "\xe6\xa2\x85"},
    {0xFA45, "\xe6\xb5\xb7"},
    {0xFA46, "\xe6\xb8\x9a"},
    {0xFA47, "\xe6\xbc\xa2"},
    {0xFA48, "\xe7\x85\xae"},
    {0xFA49, "\xe7\x88\xab"},
    {0xFA4A, "\xe7\x90\xa2"},
    {0xFA4B, "\xe7\xa2\x91"},
    {0xFA4C, "\xe7\xa4\xbe"},
    {0xFA4D, "\xe7\xa5\x89"},
    {0xFA4E, "\xe7\xa5\x88"},
    {0xFA4F, "\xe7\xa5\x90"},
    {0xFA50, "\xe7\xa5\x96"},
    {0xFA51, "\xe7\xa5\x9d"},
    {0xFA52, "\xe7\xa6\x8d"},
    {0xFA53, "\xe7\xa6\x8e"},
    {0xFA54, "\xe7\xa9\x80"},
    {0xFA55, "\xe7\xaa\x81"},
    {0xFA56, "\xe7\xaf\x80"},
    {0xFA57, "\xe7\xb7\xb4"},
    {0xFA58, "\xe7\xb8\x89"},
    {0xFA59, "\xe7\xb9\x81"},
    {0xFA5A, "\xe7\xbd\xb2"},
    {0xFA5B, "\xe8\x80\x85"},
    {0xFA5C, "\xe8\x87\xad"},
    {0xFA5D, "\xe8\x89\xb9"},
    {0xFA5E, "\xe8\x89\xb9"},
    {0xFA5F, "\xe8\x91\x97"},
    {0xFA60, "\xe8\xa4\x90"},
    {0xFA61, "\xe8\xa6\x96"},
    {0xFA62, "\xe8\xac\x81"},
    {0xFA63, "\xe8\xac\xb9"},
    {0xFA64, "\xe8\xb3\x93"},
    {0xFA65, "\xe8\xb4\x88"},
    {0xFA66, "\xe8\xbe\xb6"},
    {0xFA67, "\xe9\x80\xb8"},
    {0xFA68, "\xe9\x9b\xa3"},
    {0xFA69, "\xe9\x9f\xbf"},
    {0xFA6A, "\xe9\xa0\xbb"},
    {0xFA6B, "\xe6\x81\xb5"},
    {0xFA6C, "\xf0\xa4\x8b\xae"},
    {0xFA6D, "\xe8\x88\x98"},
    {0xFA70, "\xe4\xb8\xa6"},
    {0xFA71, "\xe5\x86\xb5"},
    {0xFA72, "\xe5\x85\xa8"},
    {0xFA73, "\xe4\xbe\x80"},
    {0xFA74, "\xe5\x85\x85"},
    {0xFA75, "\xe5\x86\x80"},
    {0xFA76, "\xe5\x8b\x87"},
    {0xFA77, "\xe5\x8b\xba"},
    {0xFA78, "\xe5\x96\x9d"},
    {0xFA79, "\xe5\x95\x95"},
    {0xFA7A, "\xe5\x96\x99"},
    {0xFA7B, "\xe5\x97\xa2"},
    {0xFA7C, "\xe5\xa1\x9a"},
    {0xFA7D, "\xe5\xa2\xb3"},
    {0xFA7E, "\xe5\xa5\x84"},
    {0xFA7F, "\xe5\xa5\x94"},
    {0xFA80, "\xe5\xa9\xa2"},
    {0xFA81, "\xe5\xac\xa8"},
    {0xFA82, "\xe5\xbb\x92"},
    {0xFA83, "\xe5\xbb\x99"},
    {0xFA84, "\xe5\xbd\xa9"},
    {0xFA85, "\xe5\xbe\xad"},
    {0xFA86, "\xe6\x83\x98"},
    {0xFA87, "\xe6\x85\x8e"},
    {0xFA88, "\xe6\x84\x88"},
    {0xFA89, "\xe6\x86\x8e"},
    {0xFA8A, "\xe6\x85\xa0"},
    {0xFA8B, "\xe6\x87\xb2"},
    {0xFA8C, "\xe6\x88\xb4"},
    {0xFA8D, "\xe6\x8f\x84"},
    {0xFA8E, "\xe6\x90\x9c"},
    {0xFA8F, "\xe6\x91\x92"},
    {0xFA90, "\xe6\x95\x96"},
    {0xFA91, "\xe6\x99\xb4"},
    {0xFA92, "\xe6\x9c\x97"},
    {0xFA93, "\xe6\x9c\x9b"},
    {0xFA94, "\xe6\x9d\x96"},
    {0xFA95, "\xe6\xad\xb9"},
    {0xFA96, "\xe6\xae\xba"},
    {0xFA97, "\xe6\xb5\x81"},
    {0xFA98, "\xe6\xbb\x9b"},
    {0xFA99, "\xe6\xbb\x8b"},
    {0xFA9A, "\xe6\xbc\xa2"},
    {0xFA9B, "\xe7\x80\x9e"},
    {0xFA9C, "\xe7\x85\xae"},
    {0xFA9D, "\xe7\x9e\xa7"},
    {0xFA9E, "\xe7\x88\xb5"},
    {0xFA9F, "\xe7\x8a\xaf"},
    {0xFAA0, "\xe7\x8c\xaa"},
    {0xFAA1, "\xe7\x91\xb1"},
    {0xFAA2, "\xe7\x94\x86"},
    {0xFAA3, "\xe7\x94\xbb"},
    {0xFAA4, "\xe7\x98\x9d"},
    {0xFAA5, "\xe7\x98\x9f"},
    {0xFAA6, "\xe7\x9b\x8a"},
    {0xFAA7, "\xe7\x9b\x9b"},
    {0xFAA8, "\xe7\x9b\xb4"},
    {0xFAA9, "\xe7\x9d\x8a"},
    {0xFAAA, "\xe7\x9d\x80"},
    {0xFAAB, "\xe7\xa3\x8c"},
    {0xFAAC, "\xe7\xaa\xb1"},
    {0xFAAD, "\xe7\xaf\x80"},
    {0xFAAE, "\xe7\xb1\xbb"},
    {0xFAAF, "\xe7\xb5\x9b"},
    {0xFAB0, "\xe7\xb7\xb4"},
    {0xFAB1, "\xe7\xbc\xbe"},
    {0xFAB2, "\xe8\x80\x85"},
    {0xFAB3, "\xe8\x8d\x92"},
    {0xFAB4, "\xe8\x8f\xaf"},
    {0xFAB5, "\xe8\x9d\xb9"},
    {0xFAB6, "\xe8\xa5\x81"},
    {0xFAB7, "\xe8\xa6\x86"},
    {0xFAB8, "\xe8\xa6\x96"},
    {0xFAB9, "\xe8\xaa\xbf"},
    {0xFABA, "\xe8\xab\xb8"},
    {0xFABB, "\xe8\xab\x8b"},
    {0xFABC, "\xe8\xac\x81"},
    {0xFABD, "\xe8\xab\xbe"},
    {0xFABE, "\xe8\xab\xad"},
    {0xFABF, "\xe8\xac\xb9"},
    {0xFAC0, "\xe8\xae\x8a"},
    {0xFAC1, "\xe8\xb4\x88"},
    {0xFAC2, "\xe8\xbc\xb8"},
    {0xFAC3, "\xe9\x81\xb2"},
    {0xFAC4, "\xe9\x86\x99"},
    {0xFAC5, "\xe9\x89\xb6"},
    {0xFAC6, "\xe9\x99\xbc"},
    {0xFAC7, "\xe9\x9b\xa3"},
    {0xFAC8, "\xe9\x9d\x96"},
    {0xFAC9, "\xe9\x9f\x9b"},
    {0xFACA, "\xe9\x9f\xbf"},
    {0xFACB, "\xe9\xa0\x8b"},
    {0xFACC, "\xe9\xa0\xbb"},
    {0xFACD, "\xe9\xac\x92"},
    {0xFACE, "\xe9\xbe\x9c"},
    {0xFACF, "\xf0\xa2\xa1\x8a"},
    {0xFAD0, "\xf0\xa2\xa1\x84"},
    {0xFAD1, "\xf0\xa3\x8f\x95"},
    {0xFAD2, "\xe3\xae\x9d"},
    {0xFAD3, "\xe4\x80\x98"},
    {0xFAD4, "\xe4\x80\xb9"},
    {0xFAD5, "\xf0\xa5\x89\x89"},
    {0xFAD6, "\xf0\xa5\xb3\x90"},
    {0xFAD7, "\xf0\xa7\xbb\x93"},
    {0xFAD8, "\xe9\xbd\x83"},
    {0xFAD9, "\xe9\xbe\x8e"},
    {0xFB00, "\x66\x66"},
    {0xFB01, "\x66\x69"},
    {0xFB02, "\x66\x6c"},
    {0xFB03, "\x66\x66\x69"},
    {0xFB04, "\x66\x66\x6c"},
    {0xFB05, "\x73\x74"},
    {0xFB06, "\x73\x74"},
    {0xFB13, "\xd5\xb4\xd5\xb6"},
    {0xFB14, "\xd5\xb4\xd5\xa5"},
    {0xFB15, "\xd5\xb4\xd5\xab"},
    {0xFB16, "\xd5\xbe\xd5\xb6"},
    {0xFB17, "\xd5\xb4\xd5\xad"},
    {0xFB1D, "\xd7\x99\xd6\xb4"},
    {0xFB1F, "\xd7\xb2\xd6\xb7"},
    {0xFB20, "\xd7\xa2"},
    {0xFB21, "\xd7\x90"},
    {0xFB22, "\xd7\x93"},
    {0xFB23, "\xd7\x94"},
    {0xFB24, "\xd7\x9b"},
    {0xFB25, "\xd7\x9c"},
    {0xFB26, "\xd7\x9d"},
    {0xFB27, "\xd7\xa8"},
    {0xFB28, "\xd7\xaa"},
    {0xFB29, "\x2b"},
    {0xFB2A, "\xd7\xa9\xd7\x81"},
    {0xFB2B, "\xd7\xa9\xd7\x82"},
    {0xFB2C, "\xd7\xa9\xd6\xbc\xd7\x81"},
    {0xFB2D, "\xd7\xa9\xd6\xbc\xd7\x82"},
    {0xFB2E, "\xd7\x90\xd6\xb7"},
    {0xFB2F, "\xd7\x90\xd6\xb8"},
    {0xFB30, "\xd7\x90\xd6\xbc"},
    {0xFB31, "\xd7\x91\xd6\xbc"},
    {0xFB32, "\xd7\x92\xd6\xbc"},
    {0xFB33, "\xd7\x93\xd6\xbc"},
    {0xFB34, "\xd7\x94\xd6\xbc"},
    {0xFB35, "\xd7\x95\xd6\xbc"},
    {0xFB36, "\xd7\x96\xd6\xbc"},
    {0xFB38, "\xd7\x98\xd6\xbc"},
    {0xFB39, "\xd7\x99\xd6\xbc"},
    {0xFB3A, "\xd7\x9a\xd6\xbc"},
    {0xFB3B, "\xd7\x9b\xd6\xbc"},
    {0xFB3C, "\xd7\x9c\xd6\xbc"},
    {0xFB3E, "\xd7\x9e\xd6\xbc"},
    {0xFB40, "\xd7\xa0\xd6\xbc"},
    {0xFB41, "\xd7\xa1\xd6\xbc"},
    {0xFB43, "\xd7\xa3\xd6\xbc"},
    {0xFB44, "\xd7\xa4\xd6\xbc"},
    {0xFB46, "\xd7\xa6\xd6\xbc"},
    {0xFB47, "\xd7\xa7\xd6\xbc"},
    {0xFB48, "\xd7\xa8\xd6\xbc"},
    {0xFB49, "\xd7\xa9\xd6\xbc"},
    {0xFB4A, "\xd7\xaa\xd6\xbc"},
    {0xFB4B, "\xd7\x95\xd6\xb9"},
    {0xFB4C, "\xd7\x91\xd6\xbf"},
    {0xFB4D, "\xd7\x9b\xd6\xbf"},
    {0xFB4E, "\xd7\xa4\xd6\xbf"},
    {0xFB4F, "\xd7\x90\xd7\x9c"},
    {0xFB50, "\xd9\xb1"},
    {0xFB51, "\xd9\xb1"},
    {0xFB52, "\xd9\xbb"},
    {0xFB53, "\xd9\xbb"},
    {0xFB54, "\xd9\xbb"},
    {0xFB55, "\xd9\xbb"},
    {0xFB56, "\xd9\xbe"},
    {0xFB57, "\xd9\xbe"},
    {0xFB58, "\xd9\xbe"},
    {0xFB59, "\xd9\xbe"},
    {0xFB5A, "\xda\x80"},
    {0xFB5B, "\xda\x80"},
    {0xFB5C, "\xda\x80"},
    {0xFB5D, "\xda\x80"},
    {0xFB5E, "\xd9\xba"},
    {0xFB5F, "\xd9\xba"},
    {0xFB60, "\xd9\xba"},
    {0xFB61, "\xd9\xba"},
    {0xFB62, "\xd9\xbf"},
    {0xFB63, "\xd9\xbf"},
    {0xFB64, "\xd9\xbf"},
    {0xFB65, "\xd9\xbf"},
    {0xFB66, "\xd9\xb9"},
    {0xFB67, "\xd9\xb9"},
    {0xFB68, "\xd9\xb9"},
    {0xFB69, "\xd9\xb9"},
    {0xFB6A, "\xda\xa4"},
    {0xFB6B, "\xda\xa4"},
    {0xFB6C, "\xda\xa4"},
    {0xFB6D, "\xda\xa4"},
    {0xFB6E, "\xda\xa6"},
    {0xFB6F, "\xda\xa6"},
    {0xFB70, "\xda\xa6"},
    {0xFB71, "\xda\xa6"},
    {0xFB72, "\xda\x84"},
    {0xFB73, "\xda\x84"},
    {0xFB74, "\xda\x84"},
    {0xFB75, "\xda\x84"},
    {0xFB76, "\xda\x83"},
    {0xFB77, "\xda\x83"},
    {0xFB78, "\xda\x83"},
    {0xFB79, "\xda\x83"},
    {0xFB7A, "\xda\x86"},
    {0xFB7B, "\xda\x86"},
    {0xFB7C, "\xda\x86"},
    {0xFB7D, "\xda\x86"},
    {0xFB7E, "\xda\x87"},
    {0xFB7F, "\xda\x87"},
    {0xFB80, "\xda\x87"},
    {0xFB81, "\xda\x87"},
    {0xFB82, "\xda\x8d"},
    {0xFB83, "\xda\x8d"},
    {0xFB84, "\xda\x8c"},
    {0xFB85, "\xda\x8c"},
    {0xFB86, "\xda\x8e"},
    {0xFB87, "\xda\x8e"},
    {0xFB88, "\xda\x88"},
    {0xFB89, "\xda\x88"},
    {0xFB8A, "\xda\x98"},
    {0xFB8B, "\xda\x98"},
    {0xFB8C, "\xda\x91"},
    {0xFB8D, "\xda\x91"},
    {0xFB8E, "\xda\xa9"},
    {0xFB8F, "\xda\xa9"},
    {0xFB90, "\xda\xa9"},
    {0xFB91, "\xda\xa9"},
    {0xFB92, "\xda\xaf"},
    {0xFB93, "\xda\xaf"},
    {0xFB94, "\xda\xaf"},
    {0xFB95, "\xda\xaf"},
    {0xFB96, "\xda\xb3"},
    {0xFB97, "\xda\xb3"},
    {0xFB98, "\xda\xb3"},
    {0xFB99, "\xda\xb3"},
    {0xFB9A, "\xda\xb1"},
    {0xFB9B, "\xda\xb1"},
    {0xFB9C, "\xda\xb1"},
    {0xFB9D, "\xda\xb1"},
    {0xFB9E, "\xda\xba"},
    {0xFB9F, "\xda\xba"},
    {0xFBA0, "\xda\xbb"},
    {0xFBA1, "\xda\xbb"},
    {0xFBA2, "\xda\xbb"},
    {0xFBA3, "\xda\xbb"},
    {0xFBA4, "\xdb\x80"},
    {0xFBA5, "\xdb\x80"},
    {0xFBA6, "\xdb\x81"},
    {0xFBA7, "\xdb\x81"},
    {0xFBA8, "\xdb\x81"},
    {0xFBA9, "\xdb\x81"},
    {0xFBAA, "\xda\xbe"},
    {0xFBAB, "\xda\xbe"},
    {0xFBAC, "\xda\xbe"},
    {0xFBAD, "\xda\xbe"},
    {0xFBAE, "\xdb\x92"},
    {0xFBAF, "\xdb\x92"},
    {0xFBB0, "\xdb\x93"},
    {0xFBB1, "\xdb\x93"},
    {0xFBD3, "\xda\xad"},
    {0xFBD4, "\xda\xad"},
    {0xFBD5, "\xda\xad"},
    {0xFBD6, "\xda\xad"},
    {0xFBD7, "\xdb\x87"},
    {0xFBD8, "\xdb\x87"},
    {0xFBD9, "\xdb\x86"},
    {0xFBDA, "\xdb\x86"},
    {0xFBDB, "\xdb\x88"},
    {0xFBDC, "\xdb\x88"},
    {0xFBDD, "\xdb\x87\xd9\xb4"},
    {0xFBDE, "\xdb\x8b"},
    {0xFBDF, "\xdb\x8b"},
    {0xFBE0, "\xdb\x85"},
    {0xFBE1, "\xdb\x85"},
    {0xFBE2, "\xdb\x89"},
    {0xFBE3, "\xdb\x89"},
    {0xFBE4, "\xdb\x90"},
    {0xFBE5, "\xdb\x90"},
    {0xFBE6, "\xdb\x90"},
    {0xFBE7, "\xdb\x90"},
    {0xFBE8, "\xd9\x89"},
    {0xFBE9, "\xd9\x89"},
    {0xFBEA, "\xd8\xa6\xd8\xa7"},
    {0xFBEB, "\xd8\xa6\xd8\xa7"},
    {0xFBEC, "\xd8\xa6\xdb\x95"},
    {0xFBED, "\xd8\xa6\xdb\x95"},
    {0xFBEE, "\xd8\xa6\xd9\x88"},
    {0xFBEF, "\xd8\xa6\xd9\x88"},
    {0xFBF0, "\xd8\xa6\xdb\x87"},
    {0xFBF1, "\xd8\xa6\xdb\x87"},
    {0xFBF2, "\xd8\xa6\xdb\x86"},
    {0xFBF3, "\xd8\xa6\xdb\x86"},
    {0xFBF4, "\xd8\xa6\xdb\x88"},
    {0xFBF5, "\xd8\xa6\xdb\x88"},
    {0xFBF6, "\xd8\xa6\xdb\x90"},
    {0xFBF7, "\xd8\xa6\xdb\x90"},
    {0xFBF8, "\xd8\xa6\xdb\x90"},
    {0xFBF9, "\xd8\xa6\xd9\x89"},
    {0xFBFA, "\xd8\xa6\xd9\x89"},
    {0xFBFB, "\xd8\xa6\xd9\x89"},
    {0xFBFC, "\xdb\x8c"},
    {0xFBFD, "\xdb\x8c"},
    {0xFBFE, "\xdb\x8c"},
    {0xFBFF, "\xdb\x8c"},
    {0xFC00, "\xd8\xa6\xd8\xac"},
    {0xFC01, "\xd8\xa6\xd8\xad"},
    {0xFC02, "\xd8\xa6\xd9\x85"},
    {0xFC03, "\xd8\xa6\xd9\x89"},
    {0xFC04, "\xd8\xa6\xd9\x8a"},
    {0xFC05, "\xd8\xa8\xd8\xac"},
    {0xFC06, "\xd8\xa8\xd8\xad"},
    {0xFC07, "\xd8\xa8\xd8\xae"},
    {0xFC08, "\xd8\xa8\xd9\x85"},
    {0xFC09, "\xd8\xa8\xd9\x89"},
    {0xFC0A, "\xd8\xa8\xd9\x8a"},
    {0xFC0B, "\xd8\xaa\xd8\xac"},
    {0xFC0C, "\xd8\xaa\xd8\xad"},
    {0xFC0D, "\xd8\xaa\xd8\xae"},
    {0xFC0E, "\xd8\xaa\xd9\x85"},
    {0xFC0F, "\xd8\xaa\xd9\x89"},
    {0xFC10, "\xd8\xaa\xd9\x8a"},
    {0xFC11, "\xd8\xab\xd8\xac"},
    {0xFC12, "\xd8\xab\xd9\x85"},
    {0xFC13, "\xd8\xab\xd9\x89"},
    {0xFC14, "\xd8\xab\xd9\x8a"},
    {0xFC15, "\xd8\xac\xd8\xad"},
    {0xFC16, "\xd8\xac\xd9\x85"},
    {0xFC17, "\xd8\xad\xd8\xac"},
    {0xFC18, "\xd8\xad\xd9\x85"},
    {0xFC19, "\xd8\xae\xd8\xac"},
    {0xFC1A, "\xd8\xae\xd8\xad"},
    {0xFC1B, "\xd8\xae\xd9\x85"},
    {0xFC1C, "\xd8\xb3\xd8\xac"},
    {0xFC1D, "\xd8\xb3\xd8\xad"},
    {0xFC1E, "\xd8\xb3\xd8\xae"},
    {0xFC1F, "\xd8\xb3\xd9\x85"},
    {0xFC20, "\xd8\xb5\xd8\xad"},
    {0xFC21, "\xd8\xb5\xd9\x85"},
    {0xFC22, "\xd8\xb6\xd8\xac"},
    {0xFC23, "\xd8\xb6\xd8\xad"},
    {0xFC24, "\xd8\xb6\xd8\xae"},
    {0xFC25, "\xd8\xb6\xd9\x85"},
    {0xFC26, "\xd8\xb7\xd8\xad"},
    {0xFC27, "\xd8\xb7\xd9\x85"},
    {0xFC28, "\xd8\xb8\xd9\x85"},
    {0xFC29, "\xd8\xb9\xd8\xac"},
    {0xFC2A, "\xd8\xb9\xd9\x85"},
    {0xFC2B, "\xd8\xba\xd8\xac"},
    {0xFC2C, "\xd8\xba\xd9\x85"},
    {0xFC2D, "\xd9\x81\xd8\xac"},
    {0xFC2E, "\xd9\x81\xd8\xad"},
    {0xFC2F, "\xd9\x81\xd8\xae"},
    {0xFC30, "\xd9\x81\xd9\x85"},
    {0xFC31, "\xd9\x81\xd9\x89"},
    {0xFC32, "\xd9\x81\xd9\x8a"},
    {0xFC33, "\xd9\x82\xd8\xad"},
    {0xFC34, "\xd9\x82\xd9\x85"},
    {0xFC35, "\xd9\x82\xd9\x89"},
    {0xFC36, "\xd9\x82\xd9\x8a"},
    {0xFC37, "\xd9\x83\xd8\xa7"},
    {0xFC38, "\xd9\x83\xd8\xac"},
    {0xFC39, "\xd9\x83\xd8\xad"},
    {0xFC3A, "\xd9\x83\xd8\xae"},
    {0xFC3B, "\xd9\x83\xd9\x84"},
    {0xFC3C, "\xd9\x83\xd9\x85"},
    {0xFC3D, "\xd9\x83\xd9\x89"},
    {0xFC3E, "\xd9\x83\xd9\x8a"},
    {0xFC3F, "\xd9\x84\xd8\xac"},
    {0xFC40, "\xd9\x84\xd8\xad"},
    {0xFC41, "\xd9\x84\xd8\xae"},
    {0xFC42, "\xd9\x84\xd9\x85"},
    {0xFC43, "\xd9\x84\xd9\x89"},
    {0xFC44, "\xd9\x84\xd9\x8a"},
    {0xFC45, "\xd9\x85\xd8\xac"},
    {0xFC46, "\xd9\x85\xd8\xad"},
    {0xFC47, "\xd9\x85\xd8\xae"},
    {0xFC48, "\xd9\x85\xd9\x85"},
    {0xFC49, "\xd9\x85\xd9\x89"},
    {0xFC4A, "\xd9\x85\xd9\x8a"},
    {0xFC4B, "\xd9\x86\xd8\xac"},
    {0xFC4C, "\xd9\x86\xd8\xad"},
    {0xFC4D, "\xd9\x86\xd8\xae"},
    {0xFC4E, "\xd9\x86\xd9\x85"},
    {0xFC4F, "\xd9\x86\xd9\x89"},
    {0xFC50, "\xd9\x86\xd9\x8a"},
    {0xFC51, "\xd9\x87\xd8\xac"},
    {0xFC52, "\xd9\x87\xd9\x85"},
    {0xFC53, "\xd9\x87\xd9\x89"},
    {0xFC54, "\xd9\x87\xd9\x8a"},
    {0xFC55, "\xd9\x8a\xd8\xac"},
    {0xFC56, "\xd9\x8a\xd8\xad"},
    {0xFC57, "\xd9\x8a\xd8\xae"},
    {0xFC58, "\xd9\x8a\xd9\x85"},
    {0xFC59, "\xd9\x8a\xd9\x89"},
    {0xFC5A, "\xd9\x8a\xd9\x8a"},
    {0xFC5B, "\xd8\xb0\xd9\xb0"},
    {0xFC5C, "\xd8\xb1\xd9\xb0"},
    {0xFC5D, "\xd9\x89\xd9\xb0"},
    {0xFC5E, "\x20\xd9\x8c\xd9\x91"},
    {0xFC5F, "\x20\xd9\x8d\xd9\x91"},
    {0xFC60, "\x20\xd9\x8e\xd9\x91"},
    {0xFC61, "\x20\xd9\x8f\xd9\x91"},
    {0xFC62, "\x20\xd9\x90\xd9\x91"},
    {0xFC63, "\x20\xd9\x91\xd9\xb0"},
    {0xFC64, "\xd8\xa6\xd8\xb1"},
    {0xFC65, "\xd8\xa6\xd8\xb2"},
    {0xFC66, "\xd8\xa6\xd9\x85"},
    {0xFC67, "\xd8\xa6\xd9\x86"},
    {0xFC68, "\xd8\xa6\xd9\x89"},
    {0xFC69, "\xd8\xa6\xd9\x8a"},
    {0xFC6A, "\xd8\xa8\xd8\xb1"},
    {0xFC6B, "\xd8\xa8\xd8\xb2"},
    {0xFC6C, "\xd8\xa8\xd9\x85"},
    {0xFC6D, "\xd8\xa8\xd9\x86"},
    {0xFC6E, "\xd8\xa8\xd9\x89"},
    {0xFC6F, "\xd8\xa8\xd9\x8a"},
    {0xFC70, "\xd8\xaa\xd8\xb1"},
    {0xFC71, "\xd8\xaa\xd8\xb2"},
    {0xFC72, "\xd8\xaa\xd9\x85"},
    {0xFC73, "\xd8\xaa\xd9\x86"},
    {0xFC74, "\xd8\xaa\xd9\x89"},
    {0xFC75, "\xd8\xaa\xd9\x8a"},
    {0xFC76, "\xd8\xab\xd8\xb1"},
    {0xFC77, "\xd8\xab\xd8\xb2"},
    {0xFC78, "\xd8\xab\xd9\x85"},
    {0xFC79, "\xd8\xab\xd9\x86"},
    {0xFC7A, "\xd8\xab\xd9\x89"},
    {0xFC7B, "\xd8\xab\xd9\x8a"},
    {0xFC7C, "\xd9\x81\xd9\x89"},
    {0xFC7D, "\xd9\x81\xd9\x8a"},
    {0xFC7E, "\xd9\x82\xd9\x89"},
    {0xFC7F, "\xd9\x82\xd9\x8a"},
    {0xFC80, "\xd9\x83\xd8\xa7"},
    {0xFC81, "\xd9\x83\xd9\x84"},
    {0xFC82, "\xd9\x83\xd9\x85"},
    {0xFC83, "\xd9\x83\xd9\x89"},
    {0xFC84, "\xd9\x83\xd9\x8a"},
    {0xFC85, "\xd9\x84\xd9\x85"},
    {0xFC86, "\xd9\x84\xd9\x89"},
    {0xFC87, "\xd9\x84\xd9\x8a"},
    {0xFC88, "\xd9\x85\xd8\xa7"},
    {0xFC89, "\xd9\x85\xd9\x85"},
    {0xFC8A, "\xd9\x86\xd8\xb1"},
    {0xFC8B, "\xd9\x86\xd8\xb2"},
    {0xFC8C, "\xd9\x86\xd9\x85"},
    {0xFC8D, "\xd9\x86\xd9\x86"},
    {0xFC8E, "\xd9\x86\xd9\x89"},
    {0xFC8F, "\xd9\x86\xd9\x8a"},
    {0xFC90, "\xd9\x89\xd9\xb0"},
    {0xFC91, "\xd9\x8a\xd8\xb1"},
    {0xFC92, "\xd9\x8a\xd8\xb2"},
    {0xFC93, "\xd9\x8a\xd9\x85"},
    {0xFC94, "\xd9\x8a\xd9\x86"},
    {0xFC95, "\xd9\x8a\xd9\x89"},
    {0xFC96, "\xd9\x8a\xd9\x8a"},
    {0xFC97, "\xd8\xa6\xd8\xac"},
    {0xFC98, "\xd8\xa6\xd8\xad"},
    {0xFC99, "\xd8\xa6\xd8\xae"},
    {0xFC9A, "\xd8\xa6\xd9\x85"},
    {0xFC9B, "\xd8\xa6\xd9\x87"},
    {0xFC9C, "\xd8\xa8\xd8\xac"},
    {0xFC9D, "\xd8\xa8\xd8\xad"},
    {0xFC9E, "\xd8\xa8\xd8\xae"},
    {0xFC9F, "\xd8\xa8\xd9\x85"},
    {0xFCA0, "\xd8\xa8\xd9\x87"},
    {0xFCA1, "\xd8\xaa\xd8\xac"},
    {0xFCA2, "\xd8\xaa\xd8\xad"},
    {0xFCA3, "\xd8\xaa\xd8\xae"},
    {0xFCA4, "\xd8\xaa\xd9\x85"},
    {0xFCA5, "\xd8\xaa\xd9\x87"},
    {0xFCA6, "\xd8\xab\xd9\x85"},
    {0xFCA7, "\xd8\xac\xd8\xad"},
    {0xFCA8, "\xd8\xac\xd9\x85"},
    {0xFCA9, "\xd8\xad\xd8\xac"},
    {0xFCAA, "\xd8\xad\xd9\x85"},
    {0xFCAB, "\xd8\xae\xd8\xac"},
    {0xFCAC, "\xd8\xae\xd9\x85"},
    {0xFCAD, "\xd8\xb3\xd8\xac"},
    {0xFCAE, "\xd8\xb3\xd8\xad"},
    {0xFCAF, "\xd8\xb3\xd8\xae"},
    {0xFCB0, "\xd8\xb3\xd9\x85"},
    {0xFCB1, "\xd8\xb5\xd8\xad"},
    {0xFCB2, "\xd8\xb5\xd8\xae"},
    {0xFCB3, "\xd8\xb5\xd9\x85"},
    {0xFCB4, "\xd8\xb6\xd8\xac"},
    {0xFCB5, "\xd8\xb6\xd8\xad"},
    {0xFCB6, "\xd8\xb6\xd8\xae"},
    {0xFCB7, "\xd8\xb6\xd9\x85"},
    {0xFCB8, "\xd8\xb7\xd8\xad"},
    {0xFCB9, "\xd8\xb8\xd9\x85"},
    {0xFCBA, "\xd8\xb9\xd8\xac"},
    {0xFCBB, "\xd8\xb9\xd9\x85"},
    {0xFCBC, "\xd8\xba\xd8\xac"},
    {0xFCBD, "\xd8\xba\xd9\x85"},
    {0xFCBE, "\xd9\x81\xd8\xac"},
    {0xFCBF, "\xd9\x81\xd8\xad"},
    {0xFCC0, "\xd9\x81\xd8\xae"},
    {0xFCC1, "\xd9\x81\xd9\x85"},
    {0xFCC2, "\xd9\x82\xd8\xad"},
    {0xFCC3, "\xd9\x82\xd9\x85"},
    {0xFCC4, "\xd9\x83\xd8\xac"},
    {0xFCC5, "\xd9\x83\xd8\xad"},
    {0xFCC6, "\xd9\x83\xd8\xae"},
    {0xFCC7, "\xd9\x83\xd9\x84"},
    {0xFCC8, "\xd9\x83\xd9\x85"},
    {0xFCC9, "\xd9\x84\xd8\xac"},
    {0xFCCA, "\xd9\x84\xd8\xad"},
    {0xFCCB, "\xd9\x84\xd8\xae"},
    {0xFCCC, "\xd9\x84\xd9\x85"},
    {0xFCCD, "\xd9\x84\xd9\x87"},
    {0xFCCE, "\xd9\x85\xd8\xac"},
    {0xFCCF, "\xd9\x85\xd8\xad"},
    {0xFCD0, "\xd9\x85\xd8\xae"},
    {0xFCD1, "\xd9\x85\xd9\x85"},
    {0xFCD2, "\xd9\x86\xd8\xac"},
    {0xFCD3, "\xd9\x86\xd8\xad"},
    {0xFCD4, "\xd9\x86\xd8\xae"},
    {0xFCD5, "\xd9\x86\xd9\x85"},
    {0xFCD6, "\xd9\x86\xd9\x87"},
    {0xFCD7, "\xd9\x87\xd8\xac"},
    {0xFCD8, "\xd9\x87\xd9\x85"},
    {0xFCD9, "\xd9\x87\xd9\xb0"},
    {0xFCDA, "\xd9\x8a\xd8\xac"},
    {0xFCDB, "\xd9\x8a\xd8\xad"},
    {0xFCDC, "\xd9\x8a\xd8\xae"},
    {0xFCDD, "\xd9\x8a\xd9\x85"},
    {0xFCDE, "\xd9\x8a\xd9\x87"},
    {0xFCDF, "\xd8\xa6\xd9\x85"},
    {0xFCE0, "\xd8\xa6\xd9\x87"},
    {0xFCE1, "\xd8\xa8\xd9\x85"},
    {0xFCE2, "\xd8\xa8\xd9\x87"},
    {0xFCE3, "\xd8\xaa\xd9\x85"},
    {0xFCE4, "\xd8\xaa\xd9\x87"},
    {0xFCE5, "\xd8\xab\xd9\x85"},
    {0xFCE6, "\xd8\xab\xd9\x87"},
    {0xFCE7, "\xd8\xb3\xd9\x85"},
    {0xFCE8, "\xd8\xb3\xd9\x87"},
    {0xFCE9, "\xd8\xb4\xd9\x85"},
    {0xFCEA, "\xd8\xb4\xd9\x87"},
    {0xFCEB, "\xd9\x83\xd9\x84"},
    {0xFCEC, "\xd9\x83\xd9\x85"},
    {0xFCED, "\xd9\x84\xd9\x85"},
    {0xFCEE, "\xd9\x86\xd9\x85"},
    {0xFCEF, "\xd9\x86\xd9\x87"},
    {0xFCF0, "\xd9\x8a\xd9\x85"},
    {0xFCF1, "\xd9\x8a\xd9\x87"},
    {0xFCF2, "\xd9\x80\xd9\x8e\xd9\x91"},
    {0xFCF3, "\xd9\x80\xd9\x8f\xd9\x91"},
    {0xFCF4, "\xd9\x80\xd9\x90\xd9\x91"},
    {0xFCF5, "\xd8\xb7\xd9\x89"},
    {0xFCF6, "\xd8\xb7\xd9\x8a"},
    {0xFCF7, "\xd8\xb9\xd9\x89"},
    {0xFCF8, "\xd8\xb9\xd9\x8a"},
    {0xFCF9, "\xd8\xba\xd9\x89"},
    {0xFCFA, "\xd8\xba\xd9\x8a"},
    {0xFCFB, "\xd8\xb3\xd9\x89"},
    {0xFCFC, "\xd8\xb3\xd9\x8a"},
    {0xFCFD, "\xd8\xb4\xd9\x89"},
    {0xFCFE, "\xd8\xb4\xd9\x8a"},
    {0xFCFF, "\xd8\xad\xd9\x89"},
    {0xFD00, "\xd8\xad\xd9\x8a"},
    {0xFD01, "\xd8\xac\xd9\x89"},
    {0xFD02, "\xd8\xac\xd9\x8a"},
    {0xFD03, "\xd8\xae\xd9\x89"},
    {0xFD04, "\xd8\xae\xd9\x8a"},
    {0xFD05, "\xd8\xb5\xd9\x89"},
    {0xFD06, "\xd8\xb5\xd9\x8a"},
    {0xFD07, "\xd8\xb6\xd9\x89"},
    {0xFD08, "\xd8\xb6\xd9\x8a"},
    {0xFD09, "\xd8\xb4\xd8\xac"},
    {0xFD0A, "\xd8\xb4\xd8\xad"},
    {0xFD0B, "\xd8\xb4\xd8\xae"},
    {0xFD0C, "\xd8\xb4\xd9\x85"},
    {0xFD0D, "\xd8\xb4\xd8\xb1"},
    {0xFD0E, "\xd8\xb3\xd8\xb1"},
    {0xFD0F, "\xd8\xb5\xd8\xb1"},
    {0xFD10, "\xd8\xb6\xd8\xb1"},
    {0xFD11, "\xd8\xb7\xd9\x89"},
    {0xFD12, "\xd8\xb7\xd9\x8a"},
    {0xFD13, "\xd8\xb9\xd9\x89"},
    {0xFD14, "\xd8\xb9\xd9\x8a"},
    {0xFD15, "\xd8\xba\xd9\x89"},
    {0xFD16, "\xd8\xba\xd9\x8a"},
    {0xFD17, "\xd8\xb3\xd9\x89"},
    {0xFD18, "\xd8\xb3\xd9\x8a"},
    {0xFD19, "\xd8\xb4\xd9\x89"},
    {0xFD1A, "\xd8\xb4\xd9\x8a"},
    {0xFD1B, "\xd8\xad\xd9\x89"},
    {0xFD1C, "\xd8\xad\xd9\x8a"},
    {0xFD1D, "\xd8\xac\xd9\x89"},
    {0xFD1E, "\xd8\xac\xd9\x8a"},
    {0xFD1F, "\xd8\xae\xd9\x89"},
    {0xFD20, "\xd8\xae\xd9\x8a"},
    {0xFD21, "\xd8\xb5\xd9\x89"},
    {0xFD22, "\xd8\xb5\xd9\x8a"},
    {0xFD23, "\xd8\xb6\xd9\x89"},
    {0xFD24, "\xd8\xb6\xd9\x8a"},
    {0xFD25, "\xd8\xb4\xd8\xac"},
    {0xFD26, "\xd8\xb4\xd8\xad"},
    {0xFD27, "\xd8\xb4\xd8\xae"},
    {0xFD28, "\xd8\xb4\xd9\x85"},
    {0xFD29, "\xd8\xb4\xd8\xb1"},
    {0xFD2A, "\xd8\xb3\xd8\xb1"},
    {0xFD2B, "\xd8\xb5\xd8\xb1"},
    {0xFD2C, "\xd8\xb6\xd8\xb1"},
    {0xFD2D, "\xd8\xb4\xd8\xac"},
    {0xFD2E, "\xd8\xb4\xd8\xad"},
    {0xFD2F, "\xd8\xb4\xd8\xae"},
    {0xFD30, "\xd8\xb4\xd9\x85"},
    {0xFD31, "\xd8\xb3\xd9\x87"},
    {0xFD32, "\xd8\xb4\xd9\x87"},
    {0xFD33, "\xd8\xb7\xd9\x85"},
    {0xFD34, "\xd8\xb3\xd8\xac"},
    {0xFD35, "\xd8\xb3\xd8\xad"},
    {0xFD36, "\xd8\xb3\xd8\xae"},
    {0xFD37, "\xd8\xb4\xd8\xac"},
    {0xFD38, "\xd8\xb4\xd8\xad"},
    {0xFD39, "\xd8\xb4\xd8\xae"},
    {0xFD3A, "\xd8\xb7\xd9\x85"},
    {0xFD3B, "\xd8\xb8\xd9\x85"},
    {0xFD3C, "\xd8\xa7\xd9\x8b"},
    {0xFD3D, "\xd8\xa7\xd9\x8b"},
    {0xFD50, "\xd8\xaa\xd8\xac\xd9\x85"},
    {0xFD51, "\xd8\xaa\xd8\xad\xd8\xac"},
    {0xFD52, "\xd8\xaa\xd8\xad\xd8\xac"},
    {0xFD53, "\xd8\xaa\xd8\xad\xd9\x85"},
    {0xFD54, "\xd8\xaa\xd8\xae\xd9\x85"},
    {0xFD55, "\xd8\xaa\xd9\x85\xd8\xac"},
    {0xFD56, "\xd8\xaa\xd9\x85\xd8\xad"},
    {0xFD57, "\xd8\xaa\xd9\x85\xd8\xae"},
    {0xFD58, "\xd8\xac\xd9\x85\xd8\xad"},
    {0xFD59, "\xd8\xac\xd9\x85\xd8\xad"},
    {0xFD5A, "\xd8\xad\xd9\x85\xd9\x8a"},
    {0xFD5B, "\xd8\xad\xd9\x85\xd9\x89"},
    {0xFD5C, "\xd8\xb3\xd8\xad\xd8\xac"},
    {0xFD5D, "\xd8\xb3\xd8\xac\xd8\xad"},
    {0xFD5E, "\xd8\xb3\xd8\xac\xd9\x89"},
    {0xFD5F, "\xd8\xb3\xd9\x85\xd8\xad"},
    {0xFD60, "\xd8\xb3\xd9\x85\xd8\xad"},
    {0xFD61, "\xd8\xb3\xd9\x85\xd8\xac"},
    {0xFD62, "\xd8\xb3\xd9\x85\xd9\x85"},
    {0xFD63, "\xd8\xb3\xd9\x85\xd9\x85"},
    {0xFD64, "\xd8\xb5\xd8\xad\xd8\xad"},
    {0xFD65, "\xd8\xb5\xd8\xad\xd8\xad"},
    {0xFD66, "\xd8\xb5\xd9\x85\xd9\x85"},
    {0xFD67, "\xd8\xb4\xd8\xad\xd9\x85"},
    {0xFD68, "\xd8\xb4\xd8\xad\xd9\x85"},
    {0xFD69, "\xd8\xb4\xd8\xac\xd9\x8a"},
    {0xFD6A, "\xd8\xb4\xd9\x85\xd8\xae"},
    {0xFD6B, "\xd8\xb4\xd9\x85\xd8\xae"},
    {0xFD6C, "\xd8\xb4\xd9\x85\xd9\x85"},
    {0xFD6D, "\xd8\xb4\xd9\x85\xd9\x85"},
    {0xFD6E, "\xd8\xb6\xd8\xad\xd9\x89"},
    {0xFD6F, "\xd8\xb6\xd8\xae\xd9\x85"},
    {0xFD70, "\xd8\xb6\xd8\xae\xd9\x85"},
    {0xFD71, "\xd8\xb7\xd9\x85\xd8\xad"},
    {0xFD72, "\xd8\xb7\xd9\x85\xd8\xad"},
    {0xFD73, "\xd8\xb7\xd9\x85\xd9\x85"},
    {0xFD74, "\xd8\xb7\xd9\x85\xd9\x8a"},
    {0xFD75, "\xd8\xb9\xd8\xac\xd9\x85"},
    {0xFD76, "\xd8\xb9\xd9\x85\xd9\x85"},
    {0xFD77, "\xd8\xb9\xd9\x85\xd9\x85"},
    {0xFD78, "\xd8\xb9\xd9\x85\xd9\x89"},
    {0xFD79, "\xd8\xba\xd9\x85\xd9\x85"},
    {0xFD7A, "\xd8\xba\xd9\x85\xd9\x8a"},
    {0xFD7B, "\xd8\xba\xd9\x85\xd9\x89"},
    {0xFD7C, "\xd9\x81\xd8\xae\xd9\x85"},
    {0xFD7D, "\xd9\x81\xd8\xae\xd9\x85"},
    {0xFD7E, "\xd9\x82\xd9\x85\xd8\xad"},
    {0xFD7F, "\xd9\x82\xd9\x85\xd9\x85"},
    {0xFD80, "\xd9\x84\xd8\xad\xd9\x85"},
    {0xFD81, "\xd9\x84\xd8\xad\xd9\x8a"},
    {0xFD82, "\xd9\x84\xd8\xad\xd9\x89"},
    {0xFD83, "\xd9\x84\xd8\xac\xd8\xac"},
    {0xFD84, "\xd9\x84\xd8\xac\xd8\xac"},
    {0xFD85, "\xd9\x84\xd8\xae\xd9\x85"},
    {0xFD86, "\xd9\x84\xd8\xae\xd9\x85"},
    {0xFD87, "\xd9\x84\xd9\x85\xd8\xad"},
    {0xFD88, "\xd9\x84\xd9\x85\xd8\xad"},
    {0xFD89, "\xd9\x85\xd8\xad\xd8\xac"},
    {0xFD8A, "\xd9\x85\xd8\xad\xd9\x85"},
    {0xFD8B, "\xd9\x85\xd8\xad\xd9\x8a"},
    {0xFD8C, "\xd9\x85\xd8\xac\xd8\xad"},
    {0xFD8D, "\xd9\x85\xd8\xac\xd9\x85"},
    {0xFD8E, "\xd9\x85\xd8\xae\xd8\xac"},
    {0xFD8F, "\xd9\x85\xd8\xae\xd9\x85"},
    {0xFD92, "\xd9\x85\xd8\xac\xd8\xae"},
    {0xFD93, "\xd9\x87\xd9\x85\xd8\xac"},
    {0xFD94, "\xd9\x87\xd9\x85\xd9\x85"},
    {0xFD95, "\xd9\x86\xd8\xad\xd9\x85"},
    {0xFD96, "\xd9\x86\xd8\xad\xd9\x89"},
    {0xFD97, "\xd9\x86\xd8\xac\xd9\x85"},
    {0xFD98, "\xd9\x86\xd8\xac\xd9\x85"},
    {0xFD99, "\xd9\x86\xd8\xac\xd9\x89"},
    {0xFD9A, "\xd9\x86\xd9\x85\xd9\x8a"},
    {0xFD9B, "\xd9\x86\xd9\x85\xd9\x89"},
    {0xFD9C, "\xd9\x8a\xd9\x85\xd9\x85"},
    {0xFD9D, "\xd9\x8a\xd9\x85\xd9\x85"},
    {0xFD9E, "\xd8\xa8\xd8\xae\xd9\x8a"},
    {0xFD9F, "\xd8\xaa\xd8\xac\xd9\x8a"},
    {0xFDA0, "\xd8\xaa\xd8\xac\xd9\x89"},
    {0xFDA1, "\xd8\xaa\xd8\xae\xd9\x8a"},
    {0xFDA2, "\xd8\xaa\xd8\xae\xd9\x89"},
    {0xFDA3, "\xd8\xaa\xd9\x85\xd9\x8a"},
    {0xFDA4, "\xd8\xaa\xd9\x85\xd9\x89"},
    {0xFDA5, "\xd8\xac\xd9\x85\xd9\x8a"},
    {0xFDA6, "\xd8\xac\xd8\xad\xd9\x89"},
    {0xFDA7, "\xd8\xac\xd9\x85\xd9\x89"},
    {0xFDA8, "\xd8\xb3\xd8\xae\xd9\x89"},
    {0xFDA9, "\xd8\xb5\xd8\xad\xd9\x8a"},
    {0xFDAA, "\xd8\xb4\xd8\xad\xd9\x8a"},
    {0xFDAB, "\xd8\xb6\xd8\xad\xd9\x8a"},
    {0xFDAC, "\xd9\x84\xd8\xac\xd9\x8a"},
    {0xFDAD, "\xd9\x84\xd9\x85\xd9\x8a"},
    {0xFDAE, "\xd9\x8a\xd8\xad\xd9\x8a"},
    {0xFDAF, "\xd9\x8a\xd8\xac\xd9\x8a"},
    {0xFDB0, "\xd9\x8a\xd9\x85\xd9\x8a"},
    {0xFDB1, "\xd9\x85\xd9\x85\xd9\x8a"},
    {0xFDB2, "\xd9\x82\xd9\x85\xd9\x8a"},
    {0xFDB3, "\xd9\x86\xd8\xad\xd9\x8a"},
    {0xFDB4, "\xd9\x82\xd9\x85\xd8\xad"},
    {0xFDB5, "\xd9\x84\xd8\xad\xd9\x85"},
    {0xFDB6, "\xd8\xb9\xd9\x85\xd9\x8a"},
    {0xFDB7, "\xd9\x83\xd9\x85\xd9\x8a"},
    {0xFDB8, "\xd9\x86\xd8\xac\xd8\xad"},
    {0xFDB9, "\xd9\x85\xd8\xae\xd9\x8a"},
    {0xFDBA, "\xd9\x84\xd8\xac\xd9\x85"},
    {0xFDBB, "\xd9\x83\xd9\x85\xd9\x85"},
    {0xFDBC, "\xd9\x84\xd8\xac\xd9\x85"},
    {0xFDBD, "\xd9\x86\xd8\xac\xd8\xad"},
    {0xFDBE, "\xd8\xac\xd8\xad\xd9\x8a"},
    {0xFDBF, "\xd8\xad\xd8\xac\xd9\x8a"},
    {0xFDC0, "\xd9\x85\xd8\xac\xd9\x8a"},
    {0xFDC1, "\xd9\x81\xd9\x85\xd9\x8a"},
    {0xFDC2, "\xd8\xa8\xd8\xad\xd9\x8a"},
    {0xFDC3, "\xd9\x83\xd9\x85\xd9\x85"},
    {0xFDC4, "\xd8\xb9\xd8\xac\xd9\x85"},
    {0xFDC5, "\xd8\xb5\xd9\x85\xd9\x85"},
    {0xFDC6, "\xd8\xb3\xd8\xae\xd9\x8a"},
    {0xFDC7, "\xd9\x86\xd8\xac\xd9\x8a"},
    {0xFDF0, "\xd8\xb5\xd9\x84\xdb\x92"},
    {0xFDF1, "\xd9\x82\xd9\x84\xdb\x92"},
    {0xFDF2, "\xd8\xa7\xd9\x84\xd9\x84\xd9\x87"},
    {0xFDF3, "\xd8\xa7\xd9\x83\xd8\xa8\xd8\xb1"},
    {0xFDF4, "\xd9\x85\xd8\xad\xd9\x85\xd8\xaf"},
    {0xFDF5, "\xd8\xb5\xd9\x84\xd8\xb9\xd9\x85"},
    {0xFDF6, "\xd8\xb1\xd8\xb3\xd9\x88\xd9\x84"},
    {0xFDF7, "\xd8\xb9\xd9\x84\xd9\x8a\xd9\x87"},
    {0xFDF8, "\xd9\x88\xd8\xb3\xd9\x84\xd9\x85"},
    {0xFDF9, "\xd8\xb5\xd9\x84\xd9\x89"},
    {0xFDFA, "\xd8\xb5\xd9\x84\xd9\x89\x20\xd8\xa7\xd9\x84\xd9\x84\xd9\x87\x20\xd8\xb9\xd9\x84\xd9\x8a\xd9\x87\x20\xd9\x88\xd8\xb3\xd9\x84\xd9\x85"},
    {0xFDFB, "\xd8\xac\xd9\x84\x20\xd8\xac\xd9\x84\xd8\xa7\xd9\x84\xd9\x87"},
    {0xFDFC, "\xd8\xb1\xdb\x8c\xd8\xa7\xd9\x84"},
    {0xFE10, "\x2c"},
    {0xFE11, "\xe3\x80\x81"},
    {0xFE12, "\xe3\x80\x82"},
    {0xFE13, "\x3a"},
    {0xFE14, "\x3b"},
    {0xFE15, "\x21"},
    {0xFE16, "\x3f"},
    {0xFE17, "\xe3\x80\x96"},
    {0xFE18, "\xe3\x80\x97"},
    {0xFE19, "\x2e\x2e\x2e"},
    {0xFE30, "\x2e\x2e"},
    {0xFE31, "\xe2\x80\x94"},
    {0xFE32, "\xe2\x80\x93"},
    {0xFE33, "\x5f"},
    {0xFE34, "\x5f"},
    {0xFE35, "\x28"},
    {0xFE36, "\x29"},
    {0xFE37, "\x7b"},
    {0xFE38, "\x7d"},
    {0xFE39, "\xe3\x80\x94"},
    {0xFE3A, "\xe3\x80\x95"},
    {0xFE3B, "\xe3\x80\x90"},
    {0xFE3C, "\xe3\x80\x91"},
    {0xFE3D, "\xe3\x80\x8a"},
    {0xFE3E, "\xe3\x80\x8b"},
    {0xFE3F, "\xe3\x80\x88"},
    {0xFE40, "\xe3\x80\x89"},
    {0xFE41, "\xe3\x80\x8c"},
    {0xFE42, "\xe3\x80\x8d"},
    {0xFE43, "\xe3\x80\x8e"},
    {0xFE44, "\xe3\x80\x8f"},
    {0xFE47, "\x5b"},
    {0xFE48, "\x5d"},
    {0xFE49, "\x20\xcc\x85"},
    {0xFE4A, "\x20\xcc\x85"},
    {0xFE4B, "\x20\xcc\x85"},
    {0xFE4C, "\x20\xcc\x85"},
    {0xFE4D, "\x5f"},
    {0xFE4E, "\x5f"},
    {0xFE4F, "\x5f"},
    {0xFE50, "\x2c"},
    {0xFE51, "\xe3\x80\x81"},
    {0xFE52, "\x2e"},
    {0xFE54, "\x3b"},
    {0xFE55, "\x3a"},
    {0xFE56, "\x3f"},
    {0xFE57, "\x21"},
    {0xFE58, "\xe2\x80\x94"},
    {0xFE59, "\x28"},
    {0xFE5A, "\x29"},
    {0xFE5B, "\x7b"},
    {0xFE5C, "\x7d"},
    {0xFE5D, "\xe3\x80\x94"},
    {0xFE5E, "\xe3\x80\x95"},
    {0xFE5F, "\x23"},
    {0xFE60, "\x26"},
    {0xFE61, "\x2a"},
    {0xFE62, "\x2b"},
    {0xFE63, "\x2d"},
    {0xFE64, "\x3c"},
    {0xFE65, "\x3e"},
    {0xFE66, "\x3d"},
    {0xFE68, "\x5c"},
    {0xFE69, "\x24"},
    {0xFE6A, "\x25"},
    {0xFE6B, "\x40"},
    {0xFE70, "\x20\xd9\x8b"},
    {0xFE71, "\xd9\x80\xd9\x8b"},
    {0xFE72, "\x20\xd9\x8c"},
    {0xFE74, "\x20\xd9\x8d"},
    {0xFE76, "\x20\xd9\x8e"},
    {0xFE77, "\xd9\x80\xd9\x8e"},
    {0xFE78, "\x20\xd9\x8f"},
    {0xFE79, "\xd9\x80\xd9\x8f"},
    {0xFE7A, "\x20\xd9\x90"},
    {0xFE7B, "\xd9\x80\xd9\x90"},
    {0xFE7C, "\x20\xd9\x91"},
    {0xFE7D, "\xd9\x80\xd9\x91"},
    {0xFE7E, "\x20\xd9\x92"},
    {0xFE7F, "\xd9\x80\xd9\x92"},
    {0xFE80, "\xd8\xa1"},
    {0xFE81, "\xd8\xa2"},
    {0xFE82, "\xd8\xa2"},
    {0xFE83, "\xd8\xa3"},
    {0xFE84, "\xd8\xa3"},
    {0xFE85, "\xd8\xa4"},
    {0xFE86, "\xd8\xa4"},
    {0xFE87, "\xd8\xa5"},
    {0xFE88, "\xd8\xa5"},
    {0xFE89, "\xd8\xa6"},
    {0xFE8A, "\xd8\xa6"},
    {0xFE8B, "\xd8\xa6"},
    {0xFE8C, "\xd8\xa6"},
    {0xFE8D, "\xd8\xa7"},
    {0xFE8E, "\xd8\xa7"},
    {0xFE8F, "\xd8\xa8"},
    {0xFE90, "\xd8\xa8"},
    {0xFE91, "\xd8\xa8"},
    {0xFE92, "\xd8\xa8"},
    {0xFE93, "\xd8\xa9"},
    {0xFE94, "\xd8\xa9"},
    {0xFE95, "\xd8\xaa"},
    {0xFE96, "\xd8\xaa"},
    {0xFE97, "\xd8\xaa"},
    {0xFE98, "\xd8\xaa"},
    {0xFE99, "\xd8\xab"},
    {0xFE9A, "\xd8\xab"},
    {0xFE9B, "\xd8\xab"},
    {0xFE9C, "\xd8\xab"},
    {0xFE9D, "\xd8\xac"},
    {0xFE9E, "\xd8\xac"},
    {0xFE9F, "\xd8\xac"},
    {0xFEA0, "\xd8\xac"},
    {0xFEA1, "\xd8\xad"},
    {0xFEA2, "\xd8\xad"},
    {0xFEA3, "\xd8\xad"},
    {0xFEA4, "\xd8\xad"},
    {0xFEA5, "\xd8\xae"},
    {0xFEA6, "\xd8\xae"},
    {0xFEA7, "\xd8\xae"},
    {0xFEA8, "\xd8\xae"},
    {0xFEA9, "\xd8\xaf"},
    {0xFEAA, "\xd8\xaf"},
    {0xFEAB, "\xd8\xb0"},
    {0xFEAC, "\xd8\xb0"},
    {0xFEAD, "\xd8\xb1"},
    {0xFEAE, "\xd8\xb1"},
    {0xFEAF, "\xd8\xb2"},
    {0xFEB0, "\xd8\xb2"},
    {0xFEB1, "\xd8\xb3"},
    {0xFEB2, "\xd8\xb3"},
    {0xFEB3, "\xd8\xb3"},
    {0xFEB4, "\xd8\xb3"},
    {0xFEB5, "\xd8\xb4"},
    {0xFEB6, "\xd8\xb4"},
    {0xFEB7, "\xd8\xb4"},
    {0xFEB8, "\xd8\xb4"},
    {0xFEB9, "\xd8\xb5"},
    {0xFEBA, "\xd8\xb5"},
    {0xFEBB, "\xd8\xb5"},
    {0xFEBC, "\xd8\xb5"},
    {0xFEBD, "\xd8\xb6"},
    {0xFEBE, "\xd8\xb6"},
    {0xFEBF, "\xd8\xb6"},
    {0xFEC0, "\xd8\xb6"},
    {0xFEC1, "\xd8\xb7"},
    {0xFEC2, "\xd8\xb7"},
    {0xFEC3, "\xd8\xb7"},
    {0xFEC4, "\xd8\xb7"},
    {0xFEC5, "\xd8\xb8"},
    {0xFEC6, "\xd8\xb8"},
    {0xFEC7, "\xd8\xb8"},
    {0xFEC8, "\xd8\xb8"},
    {0xFEC9, "\xd8\xb9"},
    {0xFECA, "\xd8\xb9"},
    {0xFECB, "\xd8\xb9"},
    {0xFECC, "\xd8\xb9"},
    {0xFECD, "\xd8\xba"},
    {0xFECE, "\xd8\xba"},
    {0xFECF, "\xd8\xba"},
    {0xFED0, "\xd8\xba"},
    {0xFED1, "\xd9\x81"},
    {0xFED2, "\xd9\x81"},
    {0xFED3, "\xd9\x81"},
    {0xFED4, "\xd9\x81"},
    {0xFED5, "\xd9\x82"},
    {0xFED6, "\xd9\x82"},
    {0xFED7, "\xd9\x82"},
    {0xFED8, "\xd9\x82"},
    {0xFED9, "\xd9\x83"},
    {0xFEDA, "\xd9\x83"},
    {0xFEDB, "\xd9\x83"},
    {0xFEDC, "\xd9\x83"},
    {0xFEDD, "\xd9\x84"},
    {0xFEDE, "\xd9\x84"},
    {0xFEDF, "\xd9\x84"},
    {0xFEE0, "\xd9\x84"},
    {0xFEE1, "\xd9\x85"},
    {0xFEE2, "\xd9\x85"},
    {0xFEE3, "\xd9\x85"},
    {0xFEE4, "\xd9\x85"},
    {0xFEE5, "\xd9\x86"},
    {0xFEE6, "\xd9\x86"},
    {0xFEE7, "\xd9\x86"},
    {0xFEE8, "\xd9\x86"},
    {0xFEE9, "\xd9\x87"},
    {0xFEEA, "\xd9\x87"},
    {0xFEEB, "\xd9\x87"},
    {0xFEEC, "\xd9\x87"},
    {0xFEED, "\xd9\x88"},
    {0xFEEE, "\xd9\x88"},
    {0xFEEF, "\xd9\x89"},
    {0xFEF0, "\xd9\x89"},
    {0xFEF1, "\xd9\x8a"},
    {0xFEF2, "\xd9\x8a"},
    {0xFEF3, "\xd9\x8a"},
    {0xFEF4, "\xd9\x8a"},
    {0xFEF5, "\xd9\x84\xd8\xa2"},
    {0xFEF6, "\xd9\x84\xd8\xa2"},
    {0xFEF7, "\xd9\x84\xd8\xa3"},
    {0xFEF8, "\xd9\x84\xd8\xa3"},
    {0xFEF9, "\xd9\x84\xd8\xa5"},
    {0xFEFA, "\xd9\x84\xd8\xa5"},
    {0xFEFB, "\xd9\x84\xd8\xa7"},
    {0xFEFC, "\xd9\x84\xd8\xa7"},
    {0xFF01, "\x21"},
    {0xFF02, "\x22"},
    {0xFF03, "\x23"},
    {0xFF04, "\x24"},
    {0xFF05, "\x25"},
    {0xFF06, "\x26"},
    {0xFF07, "\x27"},
    {0xFF08, "\x28"},
    {0xFF09, "\x29"},
    {0xFF0A, "\x2a"},
    {0xFF0B, "\x2b"},
    {0xFF0C, "\x2c"},
    {0xFF0D, "\x2d"},
    {0xFF0E, "\x2e"},
    {0xFF0F, "\x2f"},
    {0xFF10, "\x30"},
    {0xFF11, "\x31"},
    {0xFF12, "\x32"},
    {0xFF13, "\x33"},
    {0xFF14, "\x34"},
    {0xFF15, "\x35"},
    {0xFF16, "\x36"},
    {0xFF17, "\x37"},
    {0xFF18, "\x38"},
    {0xFF19, "\x39"},
    {0xFF1A, "\x3a"},
    {0xFF1B, "\x3b"},
    {0xFF1C, "\x3c"},
    {0xFF1D, "\x3d"},
    {0xFF1E, "\x3e"},
    {0xFF1F, "\x3f"},
    {0xFF20, "\x40"},
    {0xFF21, "\x41"},
    {0xFF22, "\x42"},
    {0xFF23, "\x43"},
    {0xFF24, "\x44"},
    {0xFF25, "\x45"},
    {0xFF26, "\x46"},
    {0xFF27, "\x47"},
    {0xFF28, "\x48"},
    {0xFF29, "\x49"},
    {0xFF2A, "\x4a"},
    {0xFF2B, "\x4b"},
    {0xFF2C, "\x4c"},
    {0xFF2D, "\x4d"},
    {0xFF2E, "\x4e"},
    {0xFF2F, "\x4f"},
    {0xFF30, "\x50"},
    {0xFF31, "\x51"},
    {0xFF32, "\x52"},
    {0xFF33, "\x53"},
    {0xFF34, "\x54"},
    {0xFF35, "\x55"},
    {0xFF36, "\x56"},
    {0xFF37, "\x57"},
    {0xFF38, "\x58"},
    {0xFF39, "\x59"},
    {0xFF3A, "\x5a"},
    {0xFF3B, "\x5b"},
    {0xFF3C, "\x5c"},
    {0xFF3D, "\x5d"},
    {0xFF3E, "\x5e"},
    {0xFF3F, "\x5f"},
    {0xFF40, "\x60"},
    {0xFF41, "\x61"},
    {0xFF42, "\x62"},
    {0xFF43, "\x63"},
    {0xFF44, "\x64"},
    {0xFF45, "\x65"},
    {0xFF46, "\x66"},
    {0xFF47, "\x67"},
    {0xFF48, "\x68"},
    {0xFF49, "\x69"},
    {0xFF4A, "\x6a"},
    {0xFF4B, "\x6b"},
    {0xFF4C, "\x6c"},
    {0xFF4D, "\x6d"},
    {0xFF4E, "\x6e"},
    {0xFF4F, "\x6f"},
    {0xFF50, "\x70"},
    {0xFF51, "\x71"},
    {0xFF52, "\x72"},
    {0xFF53, "\x73"},
    {0xFF54, "\x74"},
    {0xFF55, "\x75"},
    {0xFF56, "\x76"},
    {0xFF57, "\x77"},
    {0xFF58, "\x78"},
    {0xFF59, "\x79"},
    {0xFF5A, "\x7a"},
    {0xFF5B, "\x7b"},
    {0xFF5C, "\x7c"},
    {0xFF5D, "\x7d"},
    {0xFF5E, "\x7e"},
    {0xFF5F, "\xe2\xa6\x85"},
    {0xFF60, "\xe2\xa6\x86"},
    {0xFF61, "\xe3\x80\x82"},
    {0xFF62, "\xe3\x80\x8c"},
    {0xFF63, "\xe3\x80\x8d"},
    {0xFF64, "\xe3\x80\x81"},
    {0xFF65, "\xe3\x83\xbb"},
    {0xFF66, "\xe3\x83\xb2"},
    {0xFF67, "\xe3\x82\xa1"},
    {0xFF68, "\xe3\x82\xa3"},
    {0xFF69, "\xe3\x82\xa5"},
    {0xFF6A, "\xe3\x82\xa7"},
    {0xFF6B, "\xe3\x82\xa9"},
    {0xFF6C, "\xe3\x83\xa3"},
    {0xFF6D, "\xe3\x83\xa5"},
    {0xFF6E, "\xe3\x83\xa7"},
    {0xFF6F, "\xe3\x83\x83"},
    {0xFF70, "\xe3\x83\xbc"},
    {0xFF71, "\xe3\x82\xa2"},
    {0xFF72, "\xe3\x82\xa4"},
    {0xFF73, "\xe3\x82\xa6"},
    {0xFF74, "\xe3\x82\xa8"},
    {0xFF75, "\xe3\x82\xaa"},
    {0xFF76, "\xe3\x82\xab"},
    {0xFF77, "\xe3\x82\xad"},
    {0xFF78, "\xe3\x82\xaf"},
    {0xFF79, "\xe3\x82\xb1"},
    {0xFF7A, "\xe3\x82\xb3"},
    {0xFF7B, "\xe3\x82\xb5"},
    {0xFF7C, "\xe3\x82\xb7"},
    {0xFF7D, "\xe3\x82\xb9"},
    {0xFF7E, "\xe3\x82\xbb"},
    {0xFF7F, "\xe3\x82\xbd"},
    {0xFF80, "\xe3\x82\xbf"},
    {0xFF81, "\xe3\x83\x81"},
    {0xFF82, "\xe3\x83\x84"},
    {0xFF83, "\xe3\x83\x86"},
    {0xFF84, "\xe3\x83\x88"},
    {0xFF85, "\xe3\x83\x8a"},
    {0xFF86, "\xe3\x83\x8b"},
    {0xFF87, "\xe3\x83\x8c"},
    {0xFF88, "\xe3\x83\x8d"},
    {0xFF89, "\xe3\x83\x8e"},
    {0xFF8A, "\xe3\x83\x8f"},
    {0xFF8B, "\xe3\x83\x92"},
    {0xFF8C, "\xe3\x83\x95"},
    {0xFF8D, "\xe3\x83\x98"},
    {0xFF8E, "\xe3\x83\x9b"},
    {0xFF8F, "\xe3\x83\x9e"},
    {0xFF90, "\xe3\x83\x9f"},
    {0xFF91, "\xe3\x83\xa0"},
    {0xFF92, "\xe3\x83\xa1"},
    {0xFF93, "\xe3\x83\xa2"},
    {0xFF94, "\xe3\x83\xa4"},
    {0xFF95, "\xe3\x83\xa6"},
    {0xFF96, "\xe3\x83\xa8"},
    {0xFF97, "\xe3\x83\xa9"},
    {0xFF98, "\xe3\x83\xaa"},
    {0xFF99, "\xe3\x83\xab"},
    {0xFF9A, "\xe3\x83\xac"},
    {0xFF9B, "\xe3\x83\xad"},
    {0xFF9C, "\xe3\x83\xaf"},
    {0xFF9D, "\xe3\x83\xb3"},
    {0xFF9E, "\xe3\x82\x99"},
    {0xFF9F, "\xe3\x82\x9a"},
    {0xFFA0, "\xe1\x85\xa0"},
    {0xFFA1, "\xe1\x84\x80"},
    {0xFFA2, "\xe1\x84\x81"},
    {0xFFA3, "\xe1\x86\xaa"},
    {0xFFA4, "\xe1\x84\x82"},
    {0xFFA5, "\xe1\x86\xac"},
    {0xFFA6, "\xe1\x86\xad"},
    {0xFFA7, "\xe1\x84\x83"},
    {0xFFA8, "\xe1\x84\x84"},
    {0xFFA9, "\xe1\x84\x85"},
    {0xFFAA, "\xe1\x86\xb0"},
    {0xFFAB, "\xe1\x86\xb1"},
    {0xFFAC, "\xe1\x86\xb2"},
    {0xFFAD, "\xe1\x86\xb3"},
    {0xFFAE, "\xe1\x86\xb4"},
    {0xFFAF, "\xe1\x86\xb5"},
    {0xFFB0, "\xe1\x84\x9a"},
    {0xFFB1, "\xe1\x84\x86"},
    {0xFFB2, "\xe1\x84\x87"},
    {0xFFB3, "\xe1\x84\x88"},
    {0xFFB4, "\xe1\x84\xa1"},
    {0xFFB5, "\xe1\x84\x89"},
    {0xFFB6, "\xe1\x84\x8a"},
    {0xFFB7, "\xe1\x84\x8b"},
    {0xFFB8, "\xe1\x84\x8c"},
    {0xFFB9, "\xe1\x84\x8d"},
    {0xFFBA, "\xe1\x84\x8e"},
    {0xFFBB, "\xe1\x84\x8f"},
    {0xFFBC, "\xe1\x84\x90"},
    {0xFFBD, "\xe1\x84\x91"},
    {0xFFBE, "\xe1\x84\x92"},
    {0xFFC2, "\xe1\x85\xa1"},
    {0xFFC3, "\xe1\x85\xa2"},
    {0xFFC4, "\xe1\x85\xa3"},
    {0xFFC5, "\xe1\x85\xa4"},
    {0xFFC6, "\xe1\x85\xa5"},
    {0xFFC7, "\xe1\x85\xa6"},
    {0xFFCA, "\xe1\x85\xa7"},
    {0xFFCB, "\xe1\x85\xa8"},
    {0xFFCC, "\xe1\x85\xa9"},
    {0xFFCD, "\xe1\x85\xaa"},
    {0xFFCE, "\xe1\x85\xab"},
    {0xFFCF, "\xe1\x85\xac"},
    {0xFFD2, "\xe1\x85\xad"},
    {0xFFD3, "\xe1\x85\xae"},
    {0xFFD4, "\xe1\x85\xaf"},
    {0xFFD5, "\xe1\x85\xb0"},
    {0xFFD6, "\xe1\x85\xb1"},
    {0xFFD7, "\xe1\x85\xb2"},
    {0xFFDA, "\xe1\x85\xb3"},
    {0xFFDB, "\xe1\x85\xb4"},
    {0xFFDC, "\xe1\x85\xb5"},
    {0xFFE0, "\xc2\xa2"},
    {0xFFE1, "\xc2\xa3"},
    {0xFFE2, "\xc2\xac"},
    {0xFFE3, "\x20\xcc\x84"},
    {0xFFE4, "\xc2\xa6"},
    {0xFFE5, "\xc2\xa5"},
    {0xFFE6, "\xe2\x82\xa9"},
    {0xFFE8, "\xe2\x94\x82"},
    {0xFFE9, "\xe2\x86\x90"},
    {0xFFEA, "\xe2\x86\x91"},
    {0xFFEB, "\xe2\x86\x92"},
    {0xFFEC, "\xe2\x86\x93"},
    {0xFFED, "\xe2\x96\xa0"},
    {0xFFEE, "\xe2\x97\x8b"},
    {0x1D15E, "\xf0\x9d\x85\x97\xf0\x9d\x85\xa5"},
    {0x1D15F, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5"},
    {0x1D160, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D161, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x1D162, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb0"},
    {0x1D163, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb1"},
    {0x1D164, "\xf0\x9d\x85\x98\xf0\x9d\x85\xa5\xf0\x9d\x85\xb2"},
    {0x1D1BB, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5"},
    {0x1D1BC, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5"},
    {0x1D1BD, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D1BE, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x85\xae"},
    {0x1D1BF, "\xf0\x9d\x86\xb9\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x1D1C0, "\xf0\x9d\x86\xba\xf0\x9d\x85\xa5\xf0\x9d\x85\xaf"},
    {0x1D400, "\x41"},
    {0x1D401, "\x42"},
    {0x1D402, "\x43"},
    {0x1D403, "\x44"},
    {0x1D404, "\x45"},
    {0x1D405, "\x46"},
    {0x1D406, "\x47"},
    {0x1D407, "\x48"},
    {0x1D408, "\x49"},
    {0x1D409, "\x4a"},
    {0x1D40A, "\x4b"},
    {0x1D40B, "\x4c"},
    {0x1D40C, "\x4d"},
    {0x1D40D, "\x4e"},
    {0x1D40E, "\x4f"},
    {0x1D40F, "\x50"},
    {0x1D410, "\x51"},
    {0x1D411, "\x52"},
    {0x1D412, "\x53"},
    {0x1D413, "\x54"},
    {0x1D414, "\x55"},
    {0x1D415, "\x56"},
    {0x1D416, "\x57"},
    {0x1D417, "\x58"},
    {0x1D418, "\x59"},
    {0x1D419, "\x5a"},
    {0x1D41A, "\x61"},
    {0x1D41B, "\x62"},
    {0x1D41C, "\x63"},
    {0x1D41D, "\x64"},
    {0x1D41E, "\x65"},
    {0x1D41F, "\x66"},
    {0x1D420, "\x67"},
    {0x1D421, "\x68"},
    {0x1D422, "\x69"},
    {0x1D423, "\x6a"},
    {0x1D424, "\x6b"},
    {0x1D425, "\x6c"},
    {0x1D426, "\x6d"},
    {0x1D427, "\x6e"},
    {0x1D428, "\x6f"},
    {0x1D429, "\x70"},
    {0x1D42A, "\x71"},
    {0x1D42B, "\x72"},
    {0x1D42C, "\x73"},
    {0x1D42D, "\x74"},
    {0x1D42E, "\x75"},
    {0x1D42F, "\x76"},
    {0x1D430, "\x77"},
    {0x1D431, "\x78"},
    {0x1D432, "\x79"},
    {0x1D433, "\x7a"},
    {0x1D434, "\x41"},
    {0x1D435, "\x42"},
    {0x1D436, "\x43"},
    {0x1D437, "\x44"},
    {0x1D438, "\x45"},
    {0x1D439, "\x46"},
    {0x1D43A, "\x47"},
    {0x1D43B, "\x48"},
    {0x1D43C, "\x49"},
    {0x1D43D, "\x4a"},
    {0x1D43E, "\x4b"},
    {0x1D43F, "\x4c"},
    {0x1D440, "\x4d"},
    {0x1D441, "\x4e"},
    {0x1D442, "\x4f"},
    {0x1D443, "\x50"},
    {0x1D444, "\x51"},
    {0x1D445, "\x52"},
    {0x1D446, "\x53"},
    {0x1D447, "\x54"},
    {0x1D448, "\x55"},
    {0x1D449, "\x56"},
    {0x1D44A, "\x57"},
    {0x1D44B, "\x58"},
    {0x1D44C, "\x59"},
    {0x1D44D, "\x5a"},
    {0x1D44E, "\x61"},
    {0x1D44F, "\x62"},
    {0x1D450, "\x63"},
    {0x1D451, "\x64"},
    {0x1D452, "\x65"},
    {0x1D453, "\x66"},
    {0x1D454, "\x67"},
    {0x1D456, "\x69"},
    {0x1D457, "\x6a"},
    {0x1D458, "\x6b"},
    {0x1D459, "\x6c"},
    {0x1D45A, "\x6d"},
    {0x1D45B, "\x6e"},
    {0x1D45C, "\x6f"},
    {0x1D45D, "\x70"},
    {0x1D45E, "\x71"},
    {0x1D45F, "\x72"},
    {0x1D460, "\x73"},
    {0x1D461, "\x74"},
    {0x1D462, "\x75"},
    {0x1D463, "\x76"},
    {0x1D464, "\x77"},
    {0x1D465, "\x78"},
    {0x1D466, "\x79"},
    {0x1D467, "\x7a"},
    {0x1D468, "\x41"},
    {0x1D469, "\x42"},
    {0x1D46A, "\x43"},
    {0x1D46B, "\x44"},
    {0x1D46C, "\x45"},
    {0x1D46D, "\x46"},
    {0x1D46E, "\x47"},
    {0x1D46F, "\x48"},
    {0x1D470, "\x49"},
    {0x1D471, "\x4a"},
    {0x1D472, "\x4b"},
    {0x1D473, "\x4c"},
    {0x1D474, "\x4d"},
    {0x1D475, "\x4e"},
    {0x1D476, "\x4f"},
    {0x1D477, "\x50"},
    {0x1D478, "\x51"},
    {0x1D479, "\x52"},
    {0x1D47A, "\x53"},
    {0x1D47B, "\x54"},
    {0x1D47C, "\x55"},
    {0x1D47D, "\x56"},
    {0x1D47E, "\x57"},
    {0x1D47F, "\x58"},
    {0x1D480, "\x59"},
    {0x1D481, "\x5a"},
    {0x1D482, "\x61"},
    {0x1D483, "\x62"},
    {0x1D484, "\x63"},
    {0x1D485, "\x64"},
    {0x1D486, "\x65"},
    {0x1D487, "\x66"},
    {0x1D488, "\x67"},
    {0x1D489, "\x68"},
    {0x1D48A, "\x69"},
    {0x1D48B, "\x6a"},
    {0x1D48C, "\x6b"},
    {0x1D48D, "\x6c"},
    {0x1D48E, "\x6d"},
    {0x1D48F, "\x6e"},
    {0x1D490, "\x6f"},
    {0x1D491, "\x70"},
    {0x1D492, "\x71"},
    {0x1D493, "\x72"},
    {0x1D494, "\x73"},
    {0x1D495, "\x74"},
    {0x1D496, "\x75"},
    {0x1D497, "\x76"},
    {0x1D498, "\x77"},
    {0x1D499, "\x78"},
    {0x1D49A, "\x79"},
    {0x1D49B, "\x7a"},
    {0x1D49C, "\x41"},
    {0x1D49E, "\x43"},
    {0x1D49F, "\x44"},
    {0x1D4A2, "\x47"},
    {0x1D4A5, "\x4a"},
    {0x1D4A6, "\x4b"},
    {0x1D4A9, "\x4e"},
    {0x1D4AA, "\x4f"},
    {0x1D4AB, "\x50"},
    {0x1D4AC, "\x51"},
    {0x1D4AE, "\x53"},
    {0x1D4AF, "\x54"},
    {0x1D4B0, "\x55"},
    {0x1D4B1, "\x56"},
    {0x1D4B2, "\x57"},
    {0x1D4B3, "\x58"},
    {0x1D4B4, "\x59"},
    {0x1D4B5, "\x5a"},
    {0x1D4B6, "\x61"},
    {0x1D4B7, "\x62"},
    {0x1D4B8, "\x63"},
    {0x1D4B9, "\x64"},
    {0x1D4BB, "\x66"},
    {0x1D4BD, "\x68"},
    {0x1D4BE, "\x69"},
    {0x1D4BF, "\x6a"},
    {0x1D4C0, "\x6b"},
    {0x1D4C1, "\x6c"},
    {0x1D4C2, "\x6d"},
    {0x1D4C3, "\x6e"},
    {0x1D4C5, "\x70"},
    {0x1D4C6, "\x71"},
    {0x1D4C7, "\x72"},
    {0x1D4C8, "\x73"},
    {0x1D4C9, "\x74"},
    {0x1D4CA, "\x75"},
    {0x1D4CB, "\x76"},
    {0x1D4CC, "\x77"},
    {0x1D4CD, "\x78"},
    {0x1D4CE, "\x79"},
    {0x1D4CF, "\x7a"},
    {0x1D4D0, "\x41"},
    {0x1D4D1, "\x42"},
    {0x1D4D2, "\x43"},
    {0x1D4D3, "\x44"},
    {0x1D4D4, "\x45"},
    {0x1D4D5, "\x46"},
    {0x1D4D6, "\x47"},
    {0x1D4D7, "\x48"},
    {0x1D4D8, "\x49"},
    {0x1D4D9, "\x4a"},
    {0x1D4DA, "\x4b"},
    {0x1D4DB, "\x4c"},
    {0x1D4DC, "\x4d"},
    {0x1D4DD, "\x4e"},
    {0x1D4DE, "\x4f"},
    {0x1D4DF, "\x50"},
    {0x1D4E0, "\x51"},
    {0x1D4E1, "\x52"},
    {0x1D4E2, "\x53"},
    {0x1D4E3, "\x54"},
    {0x1D4E4, "\x55"},
    {0x1D4E5, "\x56"},
    {0x1D4E6, "\x57"},
    {0x1D4E7, "\x58"},
    {0x1D4E8, "\x59"},
    {0x1D4E9, "\x5a"},
    {0x1D4EA, "\x61"},
    {0x1D4EB, "\x62"},
    {0x1D4EC, "\x63"},
    {0x1D4ED, "\x64"},
    {0x1D4EE, "\x65"},
    {0x1D4EF, "\x66"},
    {0x1D4F0, "\x67"},
    {0x1D4F1, "\x68"},
    {0x1D4F2, "\x69"},
    {0x1D4F3, "\x6a"},
    {0x1D4F4, "\x6b"},
    {0x1D4F5, "\x6c"},
    {0x1D4F6, "\x6d"},
    {0x1D4F7, "\x6e"},
    {0x1D4F8, "\x6f"},
    {0x1D4F9, "\x70"},
    {0x1D4FA, "\x71"},
    {0x1D4FB, "\x72"},
    {0x1D4FC, "\x73"},
    {0x1D4FD, "\x74"},
    {0x1D4FE, "\x75"},
    {0x1D4FF, "\x76"},
    {0x1D500, "\x77"},
    {0x1D501, "\x78"},
    {0x1D502, "\x79"},
    {0x1D503, "\x7a"},
    {0x1D504, "\x41"},
    {0x1D505, "\x42"},
    {0x1D507, "\x44"},
    {0x1D508, "\x45"},
    {0x1D509, "\x46"},
    {0x1D50A, "\x47"},
    {0x1D50D, "\x4a"},
    {0x1D50E, "\x4b"},
    {0x1D50F, "\x4c"},
    {0x1D510, "\x4d"},
    {0x1D511, "\x4e"},
    {0x1D512, "\x4f"},
    {0x1D513, "\x50"},
    {0x1D514, "\x51"},
    {0x1D516, "\x53"},
    {0x1D517, "\x54"},
    {0x1D518, "\x55"},
    {0x1D519, "\x56"},
    {0x1D51A, "\x57"},
    {0x1D51B, "\x58"},
    {0x1D51C, "\x59"},
    {0x1D51E, "\x61"},
    {0x1D51F, "\x62"},
    {0x1D520, "\x63"},
    {0x1D521, "\x64"},
    {0x1D522, "\x65"},
    {0x1D523, "\x66"},
    {0x1D524, "\x67"},
    {0x1D525, "\x68"},
    {0x1D526, "\x69"},
    {0x1D527, "\x6a"},
    {0x1D528, "\x6b"},
    {0x1D529, "\x6c"},
    {0x1D52A, "\x6d"},
    {0x1D52B, "\x6e"},
    {0x1D52C, "\x6f"},
    {0x1D52D, "\x70"},
    {0x1D52E, "\x71"},
    {0x1D52F, "\x72"},
    {0x1D530, "\x73"},
    {0x1D531, "\x74"},
    {0x1D532, "\x75"},
    {0x1D533, "\x76"},
    {0x1D534, "\x77"},
    {0x1D535, "\x78"},
    {0x1D536, "\x79"},
    {0x1D537, "\x7a"},
    {0x1D538, "\x41"},
    {0x1D539, "\x42"},
    {0x1D53B, "\x44"},
    {0x1D53C, "\x45"},
    {0x1D53D, "\x46"},
    {0x1D53E, "\x47"},
    {0x1D540, "\x49"},
    {0x1D541, "\x4a"},
    {0x1D542, "\x4b"},
    {0x1D543, "\x4c"},
    {0x1D544, "\x4d"},
    {0x1D546, "\x4f"},
    {0x1D54A, "\x53"},
    {0x1D54B, "\x54"},
    {0x1D54C, "\x55"},
    {0x1D54D, "\x56"},
    {0x1D54E, "\x57"},
    {0x1D54F, "\x58"},
    {0x1D550, "\x59"},
    {0x1D552, "\x61"},
    {0x1D553, "\x62"},
    {0x1D554, "\x63"},
    {0x1D555, "\x64"},
    {0x1D556, "\x65"},
    {0x1D557, "\x66"},
    {0x1D558, "\x67"},
    {0x1D559, "\x68"},
    {0x1D55A, "\x69"},
    {0x1D55B, "\x6a"},
    {0x1D55C, "\x6b"},
    {0x1D55D, "\x6c"},
    {0x1D55E, "\x6d"},
    {0x1D55F, "\x6e"},
    {0x1D560, "\x6f"},
    {0x1D561, "\x70"},
    {0x1D562, "\x71"},
    {0x1D563, "\x72"},
    {0x1D564, "\x73"},
    {0x1D565, "\x74"},
    {0x1D566, "\x75"},
    {0x1D567, "\x76"},
    {0x1D568, "\x77"},
    {0x1D569, "\x78"},
    {0x1D56A, "\x79"},
    {0x1D56B, "\x7a"},
    {0x1D56C, "\x41"},
    {0x1D56D, "\x42"},
    {0x1D56E, "\x43"},
    {0x1D56F, "\x44"},
    {0x1D570, "\x45"},
    {0x1D571, "\x46"},
    {0x1D572, "\x47"},
    {0x1D573, "\x48"},
    {0x1D574, "\x49"},
    {0x1D575, "\x4a"},
    {0x1D576, "\x4b"},
    {0x1D577, "\x4c"},
    {0x1D578, "\x4d"},
    {0x1D579, "\x4e"},
    {0x1D57A, "\x4f"},
    {0x1D57B, "\x50"},
    {0x1D57C, "\x51"},
    {0x1D57D, "\x52"},
    {0x1D57E, "\x53"},
    {0x1D57F, "\x54"},
    {0x1D580, "\x55"},
    {0x1D581, "\x56"},
    {0x1D582, "\x57"},
    {0x1D583, "\x58"},
    {0x1D584, "\x59"},
    {0x1D585, "\x5a"},
    {0x1D586, "\x61"},
    {0x1D587, "\x62"},
    {0x1D588, "\x63"},
    {0x1D589, "\x64"},
    {0x1D58A, "\x65"},
    {0x1D58B, "\x66"},
    {0x1D58C, "\x67"},
    {0x1D58D, "\x68"},
    {0x1D58E, "\x69"},
    {0x1D58F, "\x6a"},
    {0x1D590, "\x6b"},
    {0x1D591, "\x6c"},
    {0x1D592, "\x6d"},
    {0x1D593, "\x6e"},
    {0x1D594, "\x6f"},
    {0x1D595, "\x70"},
    {0x1D596, "\x71"},
    {0x1D597, "\x72"},
    {0x1D598, "\x73"},
    {0x1D599, "\x74"},
    {0x1D59A, "\x75"},
    {0x1D59B, "\x76"},
    {0x1D59C, "\x77"},
    {0x1D59D, "\x78"},
    {0x1D59E, "\x79"},
    {0x1D59F, "\x7a"},
    {0x1D5A0, "\x41"},
    {0x1D5A1, "\x42"},
    {0x1D5A2, "\x43"},
    {0x1D5A3, "\x44"},
    {0x1D5A4, "\x45"},
    {0x1D5A5, "\x46"},
    {0x1D5A6, "\x47"},
    {0x1D5A7, "\x48"},
    {0x1D5A8, "\x49"},
    {0x1D5A9, "\x4a"},
    {0x1D5AA, "\x4b"},
    {0x1D5AB, "\x4c"},
    {0x1D5AC, "\x4d"},
    {0x1D5AD, "\x4e"},
    {0x1D5AE, "\x4f"},
    {0x1D5AF, "\x50"},
    {0x1D5B0, "\x51"},
    {0x1D5B1, "\x52"},
    {0x1D5B2, "\x53"},
    {0x1D5B3, "\x54"},
    {0x1D5B4, "\x55"},
    {0x1D5B5, "\x56"},
    {0x1D5B6, "\x57"},
    {0x1D5B7, "\x58"},
    {0x1D5B8, "\x59"},
    {0x1D5B9, "\x5a"},
    {0x1D5BA, "\x61"},
    {0x1D5BB, "\x62"},
    {0x1D5BC, "\x63"},
    {0x1D5BD, "\x64"},
    {0x1D5BE, "\x65"},
    {0x1D5BF, "\x66"},
    {0x1D5C0, "\x67"},
    {0x1D5C1, "\x68"},
    {0x1D5C2, "\x69"},
    {0x1D5C3, "\x6a"},
    {0x1D5C4, "\x6b"},
    {0x1D5C5, "\x6c"},
    {0x1D5C6, "\x6d"},
    {0x1D5C7, "\x6e"},
    {0x1D5C8, "\x6f"},
    {0x1D5C9, "\x70"},
    {0x1D5CA, "\x71"},
    {0x1D5CB, "\x72"},
    {0x1D5CC, "\x73"},
    {0x1D5CD, "\x74"},
    {0x1D5CE, "\x75"},
    {0x1D5CF, "\x76"},
    {0x1D5D0, "\x77"},
    {0x1D5D1, "\x78"},
    {0x1D5D2, "\x79"},
    {0x1D5D3, "\x7a"},
    {0x1D5D4, "\x41"},
    {0x1D5D5, "\x42"},
    {0x1D5D6, "\x43"},
    {0x1D5D7, "\x44"},
    {0x1D5D8, "\x45"},
    {0x1D5D9, "\x46"},
    {0x1D5DA, "\x47"},
    {0x1D5DB, "\x48"},
    {0x1D5DC, "\x49"},
    {0x1D5DD, "\x4a"},
    {0x1D5DE, "\x4b"},
    {0x1D5DF, "\x4c"},
    {0x1D5E0, "\x4d"},
    {0x1D5E1, "\x4e"},
    {0x1D5E2, "\x4f"},
    {0x1D5E3, "\x50"},
    {0x1D5E4, "\x51"},
    {0x1D5E5, "\x52"},
    {0x1D5E6, "\x53"},
    {0x1D5E7, "\x54"},
    {0x1D5E8, "\x55"},
    {0x1D5E9, "\x56"},
    {0x1D5EA, "\x57"},
    {0x1D5EB, "\x58"},
    {0x1D5EC, "\x59"},
    {0x1D5ED, "\x5a"},
    {0x1D5EE, "\x61"},
    {0x1D5EF, "\x62"},
    {0x1D5F0, "\x63"},
    {0x1D5F1, "\x64"},
    {0x1D5F2, "\x65"},
    {0x1D5F3, "\x66"},
    {0x1D5F4, "\x67"},
    {0x1D5F5, "\x68"},
    {0x1D5F6, "\x69"},
    {0x1D5F7, "\x6a"},
    {0x1D5F8, "\x6b"},
    {0x1D5F9, "\x6c"},
    {0x1D5FA, "\x6d"},
    {0x1D5FB, "\x6e"},
    {0x1D5FC, "\x6f"},
    {0x1D5FD, "\x70"},
    {0x1D5FE, "\x71"},
    {0x1D5FF, "\x72"},
    {0x1D600, "\x73"},
    {0x1D601, "\x74"},
    {0x1D602, "\x75"},
    {0x1D603, "\x76"},
    {0x1D604, "\x77"},
    {0x1D605, "\x78"},
    {0x1D606, "\x79"},
    {0x1D607, "\x7a"},
    {0x1D608, "\x41"},
    {0x1D609, "\x42"},
    {0x1D60A, "\x43"},
    {0x1D60B, "\x44"},
    {0x1D60C, "\x45"},
    {0x1D60D, "\x46"},
    {0x1D60E, "\x47"},
    {0x1D60F, "\x48"},
    {0x1D610, "\x49"},
    {0x1D611, "\x4a"},
    {0x1D612, "\x4b"},
    {0x1D613, "\x4c"},
    {0x1D614, "\x4d"},
    {0x1D615, "\x4e"},
    {0x1D616, "\x4f"},
    {0x1D617, "\x50"},
    {0x1D618, "\x51"},
    {0x1D619, "\x52"},
    {0x1D61A, "\x53"},
    {0x1D61B, "\x54"},
    {0x1D61C, "\x55"},
    {0x1D61D, "\x56"},
    {0x1D61E, "\x57"},
    {0x1D61F, "\x58"},
    {0x1D620, "\x59"},
    {0x1D621, "\x5a"},
    {0x1D622, "\x61"},
    {0x1D623, "\x62"},
    {0x1D624, "\x63"},
    {0x1D625, "\x64"},
    {0x1D626, "\x65"},
    {0x1D627, "\x66"},
    {0x1D628, "\x67"},
    {0x1D629, "\x68"},
    {0x1D62A, "\x69"},
    {0x1D62B, "\x6a"},
    {0x1D62C, "\x6b"},
    {0x1D62D, "\x6c"},
    {0x1D62E, "\x6d"},
    {0x1D62F, "\x6e"},
    {0x1D630, "\x6f"},
    {0x1D631, "\x70"},
    {0x1D632, "\x71"},
    {0x1D633, "\x72"},
    {0x1D634, "\x73"},
    {0x1D635, "\x74"},
    {0x1D636, "\x75"},
    {0x1D637, "\x76"},
    {0x1D638, "\x77"},
    {0x1D639, "\x78"},
    {0x1D63A, "\x79"},
    {0x1D63B, "\x7a"},
    {0x1D63C, "\x41"},
    {0x1D63D, "\x42"},
    {0x1D63E, "\x43"},
    {0x1D63F, "\x44"},
    {0x1D640, "\x45"},
    {0x1D641, "\x46"},
    {0x1D642, "\x47"},
    {0x1D643, "\x48"},
    {0x1D644, "\x49"},
    {0x1D645, "\x4a"},
    {0x1D646, "\x4b"},
    {0x1D647, "\x4c"},
    {0x1D648, "\x4d"},
    {0x1D649, "\x4e"},
    {0x1D64A, "\x4f"},
    {0x1D64B, "\x50"},
    {0x1D64C, "\x51"},
    {0x1D64D, "\x52"},
    {0x1D64E, "\x53"},
    {0x1D64F, "\x54"},
    {0x1D650, "\x55"},
    {0x1D651, "\x56"},
    {0x1D652, "\x57"},
    {0x1D653, "\x58"},
    {0x1D654, "\x59"},
    {0x1D655, "\x5a"},
    {0x1D656, "\x61"},
    {0x1D657, "\x62"},
    {0x1D658, "\x63"},
    {0x1D659, "\x64"},
    {0x1D65A, "\x65"},
    {0x1D65B, "\x66"},
    {0x1D65C, "\x67"},
    {0x1D65D, "\x68"},
    {0x1D65E, "\x69"},
    {0x1D65F, "\x6a"},
    {0x1D660, "\x6b"},
    {0x1D661, "\x6c"},
    {0x1D662, "\x6d"},
    {0x1D663, "\x6e"},
    {0x1D664, "\x6f"},
    {0x1D665, "\x70"},
    {0x1D666, "\x71"},
    {0x1D667, "\x72"},
    {0x1D668, "\x73"},
    {0x1D669, "\x74"},
    {0x1D66A, "\x75"},
    {0x1D66B, "\x76"},
    {0x1D66C, "\x77"},
    {0x1D66D, "\x78"},
    {0x1D66E, "\x79"},
    {0x1D66F, "\x7a"},
    {0x1D670, "\x41"},
    {0x1D671, "\x42"},
    {0x1D672, "\x43"},
    {0x1D673, "\x44"},
    {0x1D674, "\x45"},
    {0x1D675, "\x46"},
    {0x1D676, "\x47"},
    {0x1D677, "\x48"},
    {0x1D678, "\x49"},
    {0x1D679, "\x4a"},
    {0x1D67A, "\x4b"},
    {0x1D67B, "\x4c"},
    {0x1D67C, "\x4d"},
    {0x1D67D, "\x4e"},
    {0x1D67E, "\x4f"},
    {0x1D67F, "\x50"},
    {0x1D680, "\x51"},
    {0x1D681, "\x52"},
    {0x1D682, "\x53"},
    {0x1D683, "\x54"},
    {0x1D684, "\x55"},
    {0x1D685, "\x56"},
    {0x1D686, "\x57"},
    {0x1D687, "\x58"},
    {0x1D688, "\x59"},
    {0x1D689, "\x5a"},
    {0x1D68A, "\x61"},
    {0x1D68B, "\x62"},
    {0x1D68C, "\x63"},
    {0x1D68D, "\x64"},
    {0x1D68E, "\x65"},
    {0x1D68F, "\x66"},
    {0x1D690, "\x67"},
    {0x1D691, "\x68"},
    {0x1D692, "\x69"},
    {0x1D693, "\x6a"},
    {0x1D694, "\x6b"},
    {0x1D695, "\x6c"},
    {0x1D696, "\x6d"},
    {0x1D697, "\x6e"},
    {0x1D698, "\x6f"},
    {0x1D699, "\x70"},
    {0x1D69A, "\x71"},
    {0x1D69B, "\x72"},
    {0x1D69C, "\x73"},
    {0x1D69D, "\x74"},
    {0x1D69E, "\x75"},
    {0x1D69F, "\x76"},
    {0x1D6A0, "\x77"},
    {0x1D6A1, "\x78"},
    {0x1D6A2, "\x79"},
    {0x1D6A3, "\x7a"},
    {0x1D6A4, "\xc4\xb1"},
    {0x1D6A5, "\xc8\xb7"},
    {0x1D6A8, "\xce\x91"},
    {0x1D6A9, "\xce\x92"},
    {0x1D6AA, "\xce\x93"},
    {0x1D6AB, "\xce\x94"},
    {0x1D6AC, "\xce\x95"},
    {0x1D6AD, "\xce\x96"},
    {0x1D6AE, "\xce\x97"},
    {0x1D6AF, "\xce\x98"},
    {0x1D6B0, "\xce\x99"},
    {0x1D6B1, "\xce\x9a"},
    {0x1D6B2, "\xce\x9b"},
    {0x1D6B3, "\xce\x9c"},
    {0x1D6B4, "\xce\x9d"},
    {0x1D6B5, "\xce\x9e"},
    {0x1D6B6, "\xce\x9f"},
    {0x1D6B7, "\xce\xa0"},
    {0x1D6B8, "\xce\xa1"},
    {0x1D6B9, "\xce\x98"},
    {0x1D6BA, "\xce\xa3"},
    {0x1D6BB, "\xce\xa4"},
    {0x1D6BC, "\xce\xa5"},
    {0x1D6BD, "\xce\xa6"},
    {0x1D6BE, "\xce\xa7"},
    {0x1D6BF, "\xce\xa8"},
    {0x1D6C0, "\xce\xa9"},
    {0x1D6C1, "\xe2\x88\x87"},
    {0x1D6C2, "\xce\xb1"},
    {0x1D6C3, "\xce\xb2"},
    {0x1D6C4, "\xce\xb3"},
    {0x1D6C5, "\xce\xb4"},
    {0x1D6C6, "\xce\xb5"},
    {0x1D6C7, "\xce\xb6"},
    {0x1D6C8, "\xce\xb7"},
    {0x1D6C9, "\xce\xb8"},
    {0x1D6CA, "\xce\xb9"},
    {0x1D6CB, "\xce\xba"},
    {0x1D6CC, "\xce\xbb"},
    {0x1D6CD, "\xce\xbc"},
    {0x1D6CE, "\xce\xbd"},
    {0x1D6CF, "\xce\xbe"},
    {0x1D6D0, "\xce\xbf"},
    {0x1D6D1, "\xcf\x80"},
    {0x1D6D2, "\xcf\x81"},
    {0x1D6D3, "\xcf\x82"},
    {0x1D6D4, "\xcf\x83"},
    {0x1D6D5, "\xcf\x84"},
    {0x1D6D6, "\xcf\x85"},
    {0x1D6D7, "\xcf\x86"},
    {0x1D6D8, "\xcf\x87"},
    {0x1D6D9, "\xcf\x88"},
    {0x1D6DA, "\xcf\x89"},
    {0x1D6DB, "\xe2\x88\x82"},
    {0x1D6DC, "\xce\xb5"},
    {0x1D6DD, "\xce\xb8"},
    {0x1D6DE, "\xce\xba"},
    {0x1D6DF, "\xcf\x86"},
    {0x1D6E0, "\xcf\x81"},
    {0x1D6E1, "\xcf\x80"},
    {0x1D6E2, "\xce\x91"},
    {0x1D6E3, "\xce\x92"},
    {0x1D6E4, "\xce\x93"},
    {0x1D6E5, "\xce\x94"},
    {0x1D6E6, "\xce\x95"},
    {0x1D6E7, "\xce\x96"},
    {0x1D6E8, "\xce\x97"},
    {0x1D6E9, "\xce\x98"},
    {0x1D6EA, "\xce\x99"},
    {0x1D6EB, "\xce\x9a"},
    {0x1D6EC, "\xce\x9b"},
    {0x1D6ED, "\xce\x9c"},
    {0x1D6EE, "\xce\x9d"},
    {0x1D6EF, "\xce\x9e"},
    {0x1D6F0, "\xce\x9f"},
    {0x1D6F1, "\xce\xa0"},
    {0x1D6F2, "\xce\xa1"},
    {0x1D6F3, "\xce\x98"},
    {0x1D6F4, "\xce\xa3"},
    {0x1D6F5, "\xce\xa4"},
    {0x1D6F6, "\xce\xa5"},
    {0x1D6F7, "\xce\xa6"},
    {0x1D6F8, "\xce\xa7"},
    {0x1D6F9, "\xce\xa8"},
    {0x1D6FA, "\xce\xa9"},
    {0x1D6FB, "\xe2\x88\x87"},
    {0x1D6FC, "\xce\xb1"},
    {0x1D6FD, "\xce\xb2"},
    {0x1D6FE, "\xce\xb3"},
    {0x1D6FF, "\xce\xb4"},
    {0x1D700, "\xce\xb5"},
    {0x1D701, "\xce\xb6"},
    {0x1D702, "\xce\xb7"},
    {0x1D703, "\xce\xb8"},
    {0x1D704, "\xce\xb9"},
    {0x1D705, "\xce\xba"},
    {0x1D706, "\xce\xbb"},
    {0x1D707, "\xce\xbc"},
    {0x1D708, "\xce\xbd"},
    {0x1D709, "\xce\xbe"},
    {0x1D70A, "\xce\xbf"},
    {0x1D70B, "\xcf\x80"},
    {0x1D70C, "\xcf\x81"},
    {0x1D70D, "\xcf\x82"},
    {0x1D70E, "\xcf\x83"},
    {0x1D70F, "\xcf\x84"},
    {0x1D710, "\xcf\x85"},
    {0x1D711, "\xcf\x86"},
    {0x1D712, "\xcf\x87"},
    {0x1D713, "\xcf\x88"},
    {0x1D714, "\xcf\x89"},
    {0x1D715, "\xe2\x88\x82"},
    {0x1D716, "\xce\xb5"},
    {0x1D717, "\xce\xb8"},
    {0x1D718, "\xce\xba"},
    {0x1D719, "\xcf\x86"},
    {0x1D71A, "\xcf\x81"},
    {0x1D71B, "\xcf\x80"},
    {0x1D71C, "\xce\x91"},
    {0x1D71D, "\xce\x92"},
    {0x1D71E, "\xce\x93"},
    {0x1D71F, "\xce\x94"},
    {0x1D720, "\xce\x95"},
    {0x1D721, "\xce\x96"},
    {0x1D722, "\xce\x97"},
    {0x1D723, "\xce\x98"},
    {0x1D724, "\xce\x99"},
    {0x1D725, "\xce\x9a"},
    {0x1D726, "\xce\x9b"},
    {0x1D727, "\xce\x9c"},
    {0x1D728, "\xce\x9d"},
    {0x1D729, "\xce\x9e"},
    {0x1D72A, "\xce\x9f"},
    {0x1D72B, "\xce\xa0"},
    {0x1D72C, "\xce\xa1"},
    {0x1D72D, "\xce\x98"},
    {0x1D72E, "\xce\xa3"},
    {0x1D72F, "\xce\xa4"},
    {0x1D730, "\xce\xa5"},
    {0x1D731, "\xce\xa6"},
    {0x1D732, "\xce\xa7"},
    {0x1D733, "\xce\xa8"},
    {0x1D734, "\xce\xa9"},
    {0x1D735, "\xe2\x88\x87"},
    {0x1D736, "\xce\xb1"},
    {0x1D737, "\xce\xb2"},
    {0x1D738, "\xce\xb3"},
    {0x1D739, "\xce\xb4"},
    {0x1D73A, "\xce\xb5"},
    {0x1D73B, "\xce\xb6"},
    {0x1D73C, "\xce\xb7"},
    {0x1D73D, "\xce\xb8"},
    {0x1D73E, "\xce\xb9"},
    {0x1D73F, "\xce\xba"},
    {0x1D740, "\xce\xbb"},
    {0x1D741, "\xce\xbc"},
    {0x1D742, "\xce\xbd"},
    {0x1D743, "\xce\xbe"},
    {0x1D744, "\xce\xbf"},
    {0x1D745, "\xcf\x80"},
    {0x1D746, "\xcf\x81"},
    {0x1D747, "\xcf\x82"},
    {0x1D748, "\xcf\x83"},
    {0x1D749, "\xcf\x84"},
    {0x1D74A, "\xcf\x85"},
    {0x1D74B, "\xcf\x86"},
    {0x1D74C, "\xcf\x87"},
    {0x1D74D, "\xcf\x88"},
    {0x1D74E, "\xcf\x89"},
    {0x1D74F, "\xe2\x88\x82"},
    {0x1D750, "\xce\xb5"},
    {0x1D751, "\xce\xb8"},
    {0x1D752, "\xce\xba"},
    {0x1D753, "\xcf\x86"},
    {0x1D754, "\xcf\x81"},
    {0x1D755, "\xcf\x80"},
    {0x1D756, "\xce\x91"},
    {0x1D757, "\xce\x92"},
    {0x1D758, "\xce\x93"},
    {0x1D759, "\xce\x94"},
    {0x1D75A, "\xce\x95"},
    {0x1D75B, "\xce\x96"},
    {0x1D75C, "\xce\x97"},
    {0x1D75D, "\xce\x98"},
    {0x1D75E, "\xce\x99"},
    {0x1D75F, "\xce\x9a"},
    {0x1D760, "\xce\x9b"},
    {0x1D761, "\xce\x9c"},
    {0x1D762, "\xce\x9d"},
    {0x1D763, "\xce\x9e"},
    {0x1D764, "\xce\x9f"},
    {0x1D765, "\xce\xa0"},
    {0x1D766, "\xce\xa1"},
    {0x1D767, "\xce\x98"},
    {0x1D768, "\xce\xa3"},
    {0x1D769, "\xce\xa4"},
    {0x1D76A, "\xce\xa5"},
    {0x1D76B, "\xce\xa6"},
    {0x1D76C, "\xce\xa7"},
    {0x1D76D, "\xce\xa8"},
    {0x1D76E, "\xce\xa9"},
    {0x1D76F, "\xe2\x88\x87"},
    {0x1D770, "\xce\xb1"},
    {0x1D771, "\xce\xb2"},
    {0x1D772, "\xce\xb3"},
    {0x1D773, "\xce\xb4"},
    {0x1D774, "\xce\xb5"},
    {0x1D775, "\xce\xb6"},
    {0x1D776, "\xce\xb7"},
    {0x1D777, "\xce\xb8"},
    {0x1D778, "\xce\xb9"},
    {0x1D779, "\xce\xba"},
    {0x1D77A, "\xce\xbb"},
    {0x1D77B, "\xce\xbc"},
    {0x1D77C, "\xce\xbd"},
    {0x1D77D, "\xce\xbe"},
    {0x1D77E, "\xce\xbf"},
    {0x1D77F, "\xcf\x80"},
    {0x1D780, "\xcf\x81"},
    {0x1D781, "\xcf\x82"},
    {0x1D782, "\xcf\x83"},
    {0x1D783, "\xcf\x84"},
    {0x1D784, "\xcf\x85"},
    {0x1D785, "\xcf\x86"},
    {0x1D786, "\xcf\x87"},
    {0x1D787, "\xcf\x88"},
    {0x1D788, "\xcf\x89"},
    {0x1D789, "\xe2\x88\x82"},
    {0x1D78A, "\xce\xb5"},
    {0x1D78B, "\xce\xb8"},
    {0x1D78C, "\xce\xba"},
    {0x1D78D, "\xcf\x86"},
    {0x1D78E, "\xcf\x81"},
    {0x1D78F, "\xcf\x80"},
    {0x1D790, "\xce\x91"},
    {0x1D791, "\xce\x92"},
    {0x1D792, "\xce\x93"},
    {0x1D793, "\xce\x94"},
    {0x1D794, "\xce\x95"},
    {0x1D795, "\xce\x96"},
    {0x1D796, "\xce\x97"},
    {0x1D797, "\xce\x98"},
    {0x1D798, "\xce\x99"},
    {0x1D799, "\xce\x9a"},
    {0x1D79A, "\xce\x9b"},
    {0x1D79B, "\xce\x9c"},
    {0x1D79C, "\xce\x9d"},
    {0x1D79D, "\xce\x9e"},
    {0x1D79E, "\xce\x9f"},
    {0x1D79F, "\xce\xa0"},
    {0x1D7A0, "\xce\xa1"},
    {0x1D7A1, "\xce\x98"},
    {0x1D7A2, "\xce\xa3"},
    {0x1D7A3, "\xce\xa4"},
    {0x1D7A4, "\xce\xa5"},
    {0x1D7A5, "\xce\xa6"},
    {0x1D7A6, "\xce\xa7"},
    {0x1D7A7, "\xce\xa8"},
    {0x1D7A8, "\xce\xa9"},
    {0x1D7A9, "\xe2\x88\x87"},
    {0x1D7AA, "\xce\xb1"},
    {0x1D7AB, "\xce\xb2"},
    {0x1D7AC, "\xce\xb3"},
    {0x1D7AD, "\xce\xb4"},
    {0x1D7AE, "\xce\xb5"},
    {0x1D7AF, "\xce\xb6"},
    {0x1D7B0, "\xce\xb7"},
    {0x1D7B1, "\xce\xb8"},
    {0x1D7B2, "\xce\xb9"},
    {0x1D7B3, "\xce\xba"},
    {0x1D7B4, "\xce\xbb"},
    {0x1D7B5, "\xce\xbc"},
    {0x1D7B6, "\xce\xbd"},
    {0x1D7B7, "\xce\xbe"},
    {0x1D7B8, "\xce\xbf"},
    {0x1D7B9, "\xcf\x80"},
    {0x1D7BA, "\xcf\x81"},
    {0x1D7BB, "\xcf\x82"},
    {0x1D7BC, "\xcf\x83"},
    {0x1D7BD, "\xcf\x84"},
    {0x1D7BE, "\xcf\x85"},
    {0x1D7BF, "\xcf\x86"},
    {0x1D7C0, "\xcf\x87"},
    {0x1D7C1, "\xcf\x88"},
    {0x1D7C2, "\xcf\x89"},
    {0x1D7C3, "\xe2\x88\x82"},
    {0x1D7C4, "\xce\xb5"},
    {0x1D7C5, "\xce\xb8"},
    {0x1D7C6, "\xce\xba"},
    {0x1D7C7, "\xcf\x86"},
    {0x1D7C8, "\xcf\x81"},
    {0x1D7C9, "\xcf\x80"},
    {0x1D7CA, "\xcf\x9c"},
    {0x1D7CB, "\xcf\x9d"},
    {0x1D7CE, "\x30"},
    {0x1D7CF, "\x31"},
    {0x1D7D0, "\x32"},
    {0x1D7D1, "\x33"},
    {0x1D7D2, "\x34"},
    {0x1D7D3, "\x35"},
    {0x1D7D4, "\x36"},
    {0x1D7D5, "\x37"},
    {0x1D7D6, "\x38"},
    {0x1D7D7, "\x39"},
    {0x1D7D8, "\x30"},
    {0x1D7D9, "\x31"},
    {0x1D7DA, "\x32"},
    {0x1D7DB, "\x33"},
    {0x1D7DC, "\x34"},
    {0x1D7DD, "\x35"},
    {0x1D7DE, "\x36"},
    {0x1D7DF, "\x37"},
    {0x1D7E0, "\x38"},
    {0x1D7E1, "\x39"},
    {0x1D7E2, "\x30"},
    {0x1D7E3, "\x31"},
    {0x1D7E4, "\x32"},
    {0x1D7E5, "\x33"},
    {0x1D7E6, "\x34"},
    {0x1D7E7, "\x35"},
    {0x1D7E8, "\x36"},
    {0x1D7E9, "\x37"},
    {0x1D7EA, "\x38"},
    {0x1D7EB, "\x39"},
    {0x1D7EC, "\x30"},
    {0x1D7ED, "\x31"},
    {0x1D7EE, "\x32"},
    {0x1D7EF, "\x33"},
    {0x1D7F0, "\x34"},
    {0x1D7F1, "\x35"},
    {0x1D7F2, "\x36"},
    {0x1D7F3, "\x37"},
    {0x1D7F4, "\x38"},
    {0x1D7F5, "\x39"},
    {0x1D7F6, "\x30"},
    {0x1D7F7, "\x31"},
    {0x1D7F8, "\x32"},
    {0x1D7F9, "\x33"},
    {0x1D7FA, "\x34"},
    {0x1D7FB, "\x35"},
    {0x1D7FC, "\x36"},
    {0x1D7FD, "\x37"},
    {0x1D7FE, "\x38"},
    {0x1D7FF, "\x39"},
    {0x1EE00, "\xd8\xa7"},
    {0x1EE01, "\xd8\xa8"},
    {0x1EE02, "\xd8\xac"},
    {0x1EE03, "\xd8\xaf"},
    {0x1EE05, "\xd9\x88"},
    {0x1EE06, "\xd8\xb2"},
    {0x1EE07, "\xd8\xad"},
    {0x1EE08, "\xd8\xb7"},
    {0x1EE09, "\xd9\x8a"},
    {0x1EE0A, "\xd9\x83"},
    {0x1EE0B, "\xd9\x84"},
    {0x1EE0C, "\xd9\x85"},
    {0x1EE0D, "\xd9\x86"},
    {0x1EE0E, "\xd8\xb3"},
    {0x1EE0F, "\xd8\xb9"},
    {0x1EE10, "\xd9\x81"},
    {0x1EE11, "\xd8\xb5"},
    {0x1EE12, "\xd9\x82"},
    {0x1EE13, "\xd8\xb1"},
    {0x1EE14, "\xd8\xb4"},
    {0x1EE15, "\xd8\xaa"},
    {0x1EE16, "\xd8\xab"},
    {0x1EE17, "\xd8\xae"},
    {0x1EE18, "\xd8\xb0"},
    {0x1EE19, "\xd8\xb6"},
    {0x1EE1A, "\xd8\xb8"},
    {0x1EE1B, "\xd8\xba"},
    {0x1EE1C, "\xd9\xae"},
    {0x1EE1D, "\xda\xba"},
    {0x1EE1E, "\xda\xa1"},
    {0x1EE1F, "\xd9\xaf"},
    {0x1EE21, "\xd8\xa8"},
    {0x1EE22, "\xd8\xac"},
    {0x1EE24, "\xd9\x87"},
    {0x1EE27, "\xd8\xad"},
    {0x1EE29, "\xd9\x8a"},
    {0x1EE2A, "\xd9\x83"},
    {0x1EE2B, "\xd9\x84"},
    {0x1EE2C, "\xd9\x85"},
    {0x1EE2D, "\xd9\x86"},
    {0x1EE2E, "\xd8\xb3"},
    {0x1EE2F, "\xd8\xb9"},
    {0x1EE30, "\xd9\x81"},
    {0x1EE31, "\xd8\xb5"},
    {0x1EE32, "\xd9\x82"},
    {0x1EE34, "\xd8\xb4"},
    {0x1EE35, "\xd8\xaa"},
    {0x1EE36, "\xd8\xab"},
    {0x1EE37, "\xd8\xae"},
    {0x1EE39, "\xd8\xb6"},
    {0x1EE3B, "\xd8\xba"},
    {0x1EE42, "\xd8\xac"},
    {0x1EE47, "\xd8\xad"},
    {0x1EE49, "\xd9\x8a"},
    {0x1EE4B, "\xd9\x84"},
    {0x1EE4D, "\xd9\x86"},
    {0x1EE4E, "\xd8\xb3"},
    {0x1EE4F, "\xd8\xb9"},
    {0x1EE51, "\xd8\xb5"},
    {0x1EE52, "\xd9\x82"},
    {0x1EE54, "\xd8\xb4"},
    {0x1EE57, "\xd8\xae"},
    {0x1EE59, "\xd8\xb6"},
    {0x1EE5B, "\xd8\xba"},
    {0x1EE5D, "\xda\xba"},
    {0x1EE5F, "\xd9\xaf"},
    {0x1EE61, "\xd8\xa8"},
    {0x1EE62, "\xd8\xac"},
    {0x1EE64, "\xd9\x87"},
    {0x1EE67, "\xd8\xad"},
    {0x1EE68, "\xd8\xb7"},
    {0x1EE69, "\xd9\x8a"},
    {0x1EE6A, "\xd9\x83"},
    {0x1EE6C, "\xd9\x85"},
    {0x1EE6D, "\xd9\x86"},
    {0x1EE6E, "\xd8\xb3"},
    {0x1EE6F, "\xd8\xb9"},
    {0x1EE70, "\xd9\x81"},
    {0x1EE71, "\xd8\xb5"},
    {0x1EE72, "\xd9\x82"},
    {0x1EE74, "\xd8\xb4"},
    {0x1EE75, "\xd8\xaa"},
    {0x1EE76, "\xd8\xab"},
    {0x1EE77, "\xd8\xae"},
    {0x1EE79, "\xd8\xb6"},
    {0x1EE7A, "\xd8\xb8"},
    {0x1EE7B, "\xd8\xba"},
    {0x1EE7C, "\xd9\xae"},
    {0x1EE7E, "\xda\xa1"},
    {0x1EE80, "\xd8\xa7"},
    {0x1EE81, "\xd8\xa8"},
    {0x1EE82, "\xd8\xac"},
    {0x1EE83, "\xd8\xaf"},
    {0x1EE84, "\xd9\x87"},
    {0x1EE85, "\xd9\x88"},
    {0x1EE86, "\xd8\xb2"},
    {0x1EE87, "\xd8\xad"},
    {0x1EE88, "\xd8\xb7"},
    {0x1EE89, "\xd9\x8a"},
    {0x1EE8B, "\xd9\x84"},
    {0x1EE8C, "\xd9\x85"},
    {0x1EE8D, "\xd9\x86"},
    {0x1EE8E, "\xd8\xb3"},
    {0x1EE8F, "\xd8\xb9"},
    {0x1EE90, "\xd9\x81"},
    {0x1EE91, "\xd8\xb5"},
    {0x1EE92, "\xd9\x82"},
    {0x1EE93, "\xd8\xb1"},
    {0x1EE94, "\xd8\xb4"},
    {0x1EE95, "\xd8\xaa"},
    {0x1EE96, "\xd8\xab"},
    {0x1EE97, "\xd8\xae"},
    {0x1EE98, "\xd8\xb0"},
    {0x1EE99, "\xd8\xb6"},
    {0x1EE9A, "\xd8\xb8"},
    {0x1EE9B, "\xd8\xba"},
    {0x1EEA1, "\xd8\xa8"},
    {0x1EEA2, "\xd8\xac"},
    {0x1EEA3, "\xd8\xaf"},
    {0x1EEA5, "\xd9\x88"},
    {0x1EEA6, "\xd8\xb2"},
    {0x1EEA7, "\xd8\xad"},
    {0x1EEA8, "\xd8\xb7"},
    {0x1EEA9, "\xd9\x8a"},
    {0x1EEAB, "\xd9\x84"},
    {0x1EEAC, "\xd9\x85"},
    {0x1EEAD, "\xd9\x86"},
    {0x1EEAE, "\xd8\xb3"},
    {0x1EEAF, "\xd8\xb9"},
    {0x1EEB0, "\xd9\x81"},
    {0x1EEB1, "\xd8\xb5"},
    {0x1EEB2, "\xd9\x82"},
    {0x1EEB3, "\xd8\xb1"},
    {0x1EEB4, "\xd8\xb4"},
    {0x1EEB5, "\xd8\xaa"},
    {0x1EEB6, "\xd8\xab"},
    {0x1EEB7, "\xd8\xae"},
    {0x1EEB8, "\xd8\xb0"},
    {0x1EEB9, "\xd8\xb6"},
    {0x1EEBA, "\xd8\xb8"},
    {0x1EEBB, "\xd8\xba"},
    {0x1F100, "\x30\x2e"},
    {0x1F101, "\x30\x2c"},
    {0x1F102, "\x31\x2c"},
    {0x1F103, "\x32\x2c"},
    {0x1F104, "\x33\x2c"},
    {0x1F105, "\x34\x2c"},
    {0x1F106, "\x35\x2c"},
    {0x1F107, "\x36\x2c"},
    {0x1F108, "\x37\x2c"},
    {0x1F109, "\x38\x2c"},
    {0x1F10A, "\x39\x2c"},
    {0x1F110, "\x28\x41\x29"},
    {0x1F111, "\x28\x42\x29"},
    {0x1F112, "\x28\x43\x29"},
    {0x1F113, "\x28\x44\x29"},
    {0x1F114, "\x28\x45\x29"},
    {0x1F115, "\x28\x46\x29"},
    {0x1F116, "\x28\x47\x29"},
    {0x1F117, "\x28\x48\x29"},
    {0x1F118, "\x28\x49\x29"},
    {0x1F119, "\x28\x4a\x29"},
    {0x1F11A, "\x28\x4b\x29"},
    {0x1F11B, "\x28\x4c\x29"},
    {0x1F11C, "\x28\x4d\x29"},
    {0x1F11D, "\x28\x4e\x29"},
    {0x1F11E, "\x28\x4f\x29"},
    {0x1F11F, "\x28\x50\x29"},
    {0x1F120, "\x28\x51\x29"},
    {0x1F121, "\x28\x52\x29"},
    {0x1F122, "\x28\x53\x29"},
    {0x1F123, "\x28\x54\x29"},
    {0x1F124, "\x28\x55\x29"},
    {0x1F125, "\x28\x56\x29"},
    {0x1F126, "\x28\x57\x29"},
    {0x1F127, "\x28\x58\x29"},
    {0x1F128, "\x28\x59\x29"},
    {0x1F129, "\x28\x5a\x29"},
    {0x1F12A, "\xe3\x80\x94\x53\xe3\x80\x95"},
    {0x1F12B, "\x43"},
    {0x1F12C, "\x52"},
    {0x1F12D, "\x43\x44"},
    {0x1F12E, "\x57\x5a"},
    {0x1F130, "\x41"},
    {0x1F131, "\x42"},
    {0x1F132, "\x43"},
    {0x1F133, "\x44"},
    {0x1F134, "\x45"},
    {0x1F135, "\x46"},
    {0x1F136, "\x47"},
    {0x1F137, "\x48"},
    {0x1F138, "\x49"},
    {0x1F139, "\x4a"},
    {0x1F13A, "\x4b"},
    {0x1F13B, "\x4c"},
    {0x1F13C, "\x4d"},
    {0x1F13D, "\x4e"},
    {0x1F13E, "\x4f"},
    {0x1F13F, "\x50"},
    {0x1F140, "\x51"},
    {0x1F141, "\x52"},
    {0x1F142, "\x53"},
    {0x1F143, "\x54"},
    {0x1F144, "\x55"},
    {0x1F145, "\x56"},
    {0x1F146, "\x57"},
    {0x1F147, "\x58"},
    {0x1F148, "\x59"},
    {0x1F149, "\x5a"},
    {0x1F14A, "\x48\x56"},
    {0x1F14B, "\x4d\x56"},
    {0x1F14C, "\x53\x44"},
    {0x1F14D, "\x53\x53"},
    {0x1F14E, "\x50\x50\x56"},
    {0x1F14F, "\x57\x43"},
    {0x1F16A, "\x4d\x43"},
    {0x1F16B, "\x4d\x44"},
    {0x1F16C, "\x4d\x52"},
    {0x1F190, "\x44\x4a"},
    {0x1F200, "\xe3\x81\xbb\xe3\x81\x8b"},
    {0x1F201, "\xe3\x82\xb3\xe3\x82\xb3"},
    {0x1F202, "\xe3\x82\xb5"},
    {0x1F210, "\xe6\x89\x8b"},
    {0x1F211, "\xe5\xad\x97"},
    {0x1F212, "\xe5\x8f\x8c"},
    {0x1F213, "\xe3\x83\x87"},
    {0x1F214, "\xe4\xba\x8c"},
    {0x1F215, "\xe5\xa4\x9a"},
    {0x1F216, "\xe8\xa7\xa3"},
    {0x1F217, "\xe5\xa4\xa9"},
    {0x1F218, "\xe4\xba\xa4"},
    {0x1F219, "\xe6\x98\xa0"},
    {0x1F21A, "\xe7\x84\xa1"},
    {0x1F21B, "\xe6\x96\x99"},
    {0x1F21C, "\xe5\x89\x8d"},
    {0x1F21D, "\xe5\xbe\x8c"},
    {0x1F21E, "\xe5\x86\x8d"},
    {0x1F21F, "\xe6\x96\xb0"},
    {0x1F220, "\xe5\x88\x9d"},
    {0x1F221, "\xe7\xb5\x82"},
    {0x1F222, "\xe7\x94\x9f"},
    {0x1F223, "\xe8\xb2\xa9"},
    {0x1F224, "\xe5\xa3\xb0"},
    {0x1F225, "\xe5\x90\xb9"},
    {0x1F226, "\xe6\xbc\x94"},
    {0x1F227, "\xe6\x8a\x95"},
    {0x1F228, "\xe6\x8d\x95"},
    {0x1F229, "\xe4\xb8\x80"},
    {0x1F22A, "\xe4\xb8\x89"},
    {0x1F22B, "\xe9\x81\x8a"},
    {0x1F22C, "\xe5\xb7\xa6"},
    {0x1F22D, "\xe4\xb8\xad"},
    {0x1F22E, "\xe5\x8f\xb3"},
    {0x1F22F, "\xe6\x8c\x87"},
    {0x1F230, "\xe8\xb5\xb0"},
    {0x1F231, "\xe6\x89\x93"},
    {0x1F232, "\xe7\xa6\x81"},
    {0x1F233, "\xe7\xa9\xba"},
    {0x1F234, "\xe5\x90\x88"},
    {0x1F235, "\xe6\xba\x80"},
    {0x1F236, "\xe6\x9c\x89"},
    {0x1F237, "\xe6\x9c\x88"},
    {0x1F238, "\xe7\x94\xb3"},
    {0x1F239, "\xe5\x89\xb2"},
    {0x1F23A, "\xe5\x96\xb6"},
    {0x1F23B, "\xe9\x85\x8d"},
    {0x1F240, "\xe3\x80\x94\xe6\x9c\xac\xe3\x80\x95"},
    {0x1F241, "\xe3\x80\x94\xe4\xb8\x89\xe3\x80\x95"},
    {0x1F242, "\xe3\x80\x94\xe4\xba\x8c\xe3\x80\x95"},
    {0x1F243, "\xe3\x80\x94\xe5\xae\x89\xe3\x80\x95"},
    {0x1F244, "\xe3\x80\x94\xe7\x82\xb9\xe3\x80\x95"},
    {0x1F245, "\xe3\x80\x94\xe6\x89\x93\xe3\x80\x95"},
    {0x1F246, "\xe3\x80\x94\xe7\x9b\x97\xe3\x80\x95"},
    {0x1F247, "\xe3\x80\x94\xe5\x8b\x9d\xe3\x80\x95"},
    {0x1F248, "\xe3\x80\x94\xe6\x95\x97\xe3\x80\x95"},
    {0x1F250, "\xe5\xbe\x97"},
    {0x1F251, "\xe5\x8f\xaf"},
    {0x1FBF0, "\x30"},
    {0x1FBF1, "\x31"},
    {0x1FBF2, "\x32"},
    {0x1FBF3, "\x33"},
    {0x1FBF4, "\x34"},
    {0x1FBF5, "\x35"},
    {0x1FBF6, "\x36"},
    {0x1FBF7, "\x37"},
    {0x1FBF8, "\x38"},
    {0x1FBF9, "\x39"},
    {0x2F800, "\xe4\xb8\xbd"},
    {0x2F801, "\xe4\xb8\xb8"},
    {0x2F802, "\xe4\xb9\x81"},
    {0x2F803, "\xf0\xa0\x84\xa2"},
    {0x2F804, "\xe4\xbd\xa0"},
    {0x2F805, "\xe4\xbe\xae"},
    {0x2F806, "\xe4\xbe\xbb"},
    {0x2F807, "\xe5\x80\x82"},
    {0x2F808, "\xe5\x81\xba"},
    {0x2F809, "\xe5\x82\x99"},
    {0x2F80A, "\xe5\x83\xa7"},
    {0x2F80B, "\xe5\x83\x8f"},
    {0x2F80C, "\xe3\x92\x9e"},
    {0x2F80D, "\xf0\xa0\x98\xba"},
    {0x2F80E, "\xe5\x85\x8d"},
    {0x2F80F, "\xe5\x85\x94"},
    {0x2F810, "\xe5\x85\xa4"},
    {0x2F811, "\xe5\x85\xb7"},
    {0x2F812, "\xf0\xa0\x94\x9c"},
    {0x2F813, "\xe3\x92\xb9"},
    {0x2F814, "\xe5\x85\xa7"},
    {0x2F815, "\xe5\x86\x8d"},
    {0x2F816, "\xf0\xa0\x95\x8b"},
    {0x2F817, "\xe5\x86\x97"},
    {0x2F818, "\xe5\x86\xa4"},
    {0x2F819, "\xe4\xbb\x8c"},
    {0x2F81A, "\xe5\x86\xac"},
    {0x2F81B, "\xe5\x86\xb5"},
    {0x2F81C, "\xf0\xa9\x87\x9f"},
    {0x2F81D, "\xe5\x87\xb5"},
    {0x2F81E, "\xe5\x88\x83"},
    {0x2F81F, "\xe3\x93\x9f"},
    {0x2F820, "\xe5\x88\xbb"},
    {0x2F821, "\xe5\x89\x86"},
    {0x2F822, "\xe5\x89\xb2"},
    {0x2F823, "\xe5\x89\xb7"},
    {0x2F824, "\xe3\x94\x95"},
    {0x2F825, "\xe5\x8b\x87"},
    {0x2F826, "\xe5\x8b\x89"},
    {0x2F827, "\xe5\x8b\xa4"},
    {0x2F828, "\xe5\x8b\xba"},
    {0x2F829, "\xe5\x8c\x85"},
    {0x2F82A, "\xe5\x8c\x86"},
    {0x2F82B, "\xe5\x8c\x97"},
    {0x2F82C, "\xe5\x8d\x89"},
    {0x2F82D, "\xe5\x8d\x91"},
    {0x2F82E, "\xe5\x8d\x9a"},
    {0x2F82F, "\xe5\x8d\xb3"},
    {0x2F830, "\xe5\x8d\xbd"},
    {0x2F831, "\xe5\x8d\xbf"},
    {0x2F832, "\xe5\x8d\xbf"},
    {0x2F833, "\xe5\x8d\xbf"},
    {0x2F834, "\xf0\xa0\xa8\xac"},
    {0x2F835, "\xe7\x81\xb0"},
    {0x2F836, "\xe5\x8f\x8a"},
    {0x2F837, "\xe5\x8f\x9f"},
    {0x2F838, "\xf0\xa0\xad\xa3"},
    {0x2F839, "\xe5\x8f\xab"},
    {0x2F83A, "\xe5\x8f\xb1"},
    {0x2F83B, "\xe5\x90\x86"},
    {0x2F83C, "\xe5\x92\x9e"},
    {0x2F83D, "\xe5\x90\xb8"},
    {0x2F83E, "\xe5\x91\x88"},
    {0x2F83F, "\xe5\x91\xa8"},
    {0x2F840, "\xe5\x92\xa2"},
    {0x2F841, "\xe5\x93\xb6"},
    {0x2F842, "\xe5\x94\x90"},
    {0x2F843, "\xe5\x95\x93"},
    {0x2F844, "\xe5\x95\xa3"},
    {0x2F845, "\xe5\x96\x84"},
    {0x2F846, "\xe5\x96\x84"},
    {0x2F847, "\xe5\x96\x99"},
    {0x2F848, "\xe5\x96\xab"},
    {0x2F849, "\xe5\x96\xb3"},
    {0x2F84A, "\xe5\x97\x82"},
    {0x2F84B, "\xe5\x9c\x96"},
    {0x2F84C, "\xe5\x98\x86"},
    {0x2F84D, "\xe5\x9c\x97"},
    {0x2F84E, "\xe5\x99\x91"},
    {0x2F84F, "\xe5\x99\xb4"},
    {0x2F850, "\xe5\x88\x87"},
    {0x2F851, "\xe5\xa3\xae"},
    {0x2F852, "\xe5\x9f\x8e"},
    {0x2F853, "\xe5\x9f\xb4"},
    {0x2F854, "\xe5\xa0\x8d"},
    {0x2F855, "\xe5\x9e\x8b"},
    {0x2F856, "\xe5\xa0\xb2"},
    {0x2F857, "\xe5\xa0\xb1"},
    {0x2F858, "\xe5\xa2\xac"},
    {0x2F859, "\xf0\xa1\x93\xa4"},
    {0x2F85A, "\xe5\xa3\xb2"},
    {0x2F85B, "\xe5\xa3\xb7"},
    {0x2F85C, "\xe5\xa4\x86"},
    {0x2F85D, "\xe5\xa4\x9a"},
    {0x2F85E, "\xe5\xa4\xa2"},
    {0x2F85F, "\xe5\xa5\xa2"},
    {0x2F860, "\xf0\xa1\x9a\xa8"},
    {0x2F861, "\xf0\xa1\x9b\xaa"},
    {0x2F862, "\xe5\xa7\xac"},
    {0x2F863, "\xe5\xa8\x9b"},
    {0x2F864, "\xe5\xa8\xa7"},
    {0x2F865, "\xe5\xa7\x98"},
    {0x2F866, "\xe5\xa9\xa6"},
    {0x2F867, "\xe3\x9b\xae"},
    {0x2F868, "\xe3\x9b\xbc"},
    {0x2F869, "\xe5\xac\x88"},
    {0x2F86A, "\xe5\xac\xbe"},
    {0x2F86B, "\xe5\xac\xbe"},
    {0x2F86C, "\xf0\xa1\xa7\x88"},
    {0x2F86D, "\xe5\xaf\x83"},
    {0x2F86E, "\xe5\xaf\x98"},
    {0x2F86F, "\xe5\xaf\xa7"},
    {0x2F870, "\xe5\xaf\xb3"},
    {0x2F871, "\xf0\xa1\xac\x98"},
    {0x2F872, "\xe5\xaf\xbf"},
    {0x2F873, "\xe5\xb0\x86"},
    {0x2F874, "\xe5\xbd\x93"},
    {0x2F875, "\xe5\xb0\xa2"},
    {0x2F876, "\xe3\x9e\x81"},
    {0x2F877, "\xe5\xb1\xa0"},
    {0x2F878, "\xe5\xb1\xae"},
    {0x2F879, "\xe5\xb3\x80"},
    {0x2F87A, "\xe5\xb2\x8d"},
    {0x2F87B, "\xf0\xa1\xb7\xa4"},
    {0x2F87C, "\xe5\xb5\x83"},
    {0x2F87D, "\xf0\xa1\xb7\xa6"},
    {0x2F87E, "\xe5\xb5\xae"},
    {0x2F87F, "\xe5\xb5\xab"},
    {0x2F880, "\xe5\xb5\xbc"},
    {0x2F881, "\xe5\xb7\xa1"},
    {0x2F882, "\xe5\xb7\xa2"},
    {0x2F883, "\xe3\xa0\xaf"},
    {0x2F884, "\xe5\xb7\xbd"},
    {0x2F885, "\xe5\xb8\xa8"},
    {0x2F886, "\xe5\xb8\xbd"},
    {0x2F887, "\xe5\xb9\xa9"},
    {0x2F888, "\xe3\xa1\xa2"},
    {0x2F889, "\xf0\xa2\x86\x83"},
    {0x2F88A, "\xe3\xa1\xbc"},
    {0x2F88B, "\xe5\xba\xb0"},
    {0x2F88C, "\xe5\xba\xb3"},
    {0x2F88D, "\xe5\xba\xb6"},
    {0x2F88E, "\xe5\xbb\x8a"},
    {0x2F88F, "\xf0\xaa\x8e\x92"},
    {0x2F890, "\xe5\xbb\xbe"},
    {0x2F891, "\xf0\xa2\x8c\xb1"},
    {0x2F892, "\xf0\xa2\x8c\xb1"},
    {0x2F893, "\xe8\x88\x81"},
    {0x2F894, "\xe5\xbc\xa2"},
    {0x2F895, "\xe5\xbc\xa2"},
    {0x2F896, "\xe3\xa3\x87"},
    {0x2F897, "\xf0\xa3\x8a\xb8"},
    {0x2F898, "\xf0\xa6\x87\x9a"},
    {0x2F899, "\xe5\xbd\xa2"},
    {0x2F89A, "\xe5\xbd\xab"},
    {0x2F89B, "\xe3\xa3\xa3"},
    {0x2F89C, "\xe5\xbe\x9a"},
    {0x2F89D, "\xe5\xbf\x8d"},
    {0x2F89E, "\xe5\xbf\x97"},
    {0x2F89F, "\xe5\xbf\xb9"},
    {0x2F8A0, "\xe6\x82\x81"},
    {0x2F8A1, "\xe3\xa4\xba"},
    {0x2F8A2, "\xe3\xa4\x9c"},
    {0x2F8A3, "\xe6\x82\x94"},
    {0x2F8A4, "\xf0\xa2\x9b\x94"},
    {0x2F8A5, "\xe6\x83\x87"},
    {0x2F8A6, "\xe6\x85\x88"},
    {0x2F8A7, "\xe6\x85\x8c"},
    {0x2F8A8, "\xe6\x85\x8e"},
    {0x2F8A9, "\xe6\x85\x8c"},
    {0x2F8AA, "\xe6\x85\xba"},
    {0x2F8AB, "\xe6\x86\x8e"},
    {0x2F8AC, "\xe6\x86\xb2"},
    {0x2F8AD, "\xe6\x86\xa4"},
    {0x2F8AE, "\xe6\x86\xaf"},
    {0x2F8AF, "\xe6\x87\x9e"},
    {0x2F8B0, "\xe6\x87\xb2"},
    {0x2F8B1, "\xe6\x87\xb6"},
    {0x2F8B2, "\xe6\x88\x90"},
    {0x2F8B3, "\xe6\x88\x9b"},
    {0x2F8B4, "\xe6\x89\x9d"},
    {0x2F8B5, "\xe6\x8a\xb1"},
    {0x2F8B6, "\xe6\x8b\x94"},
    {0x2F8B7, "\xe6\x8d\x90"},
    {0x2F8B8, "\xf0\xa2\xac\x8c"},
    {0x2F8B9, "\xe6\x8c\xbd"},
    {0x2F8BA, "\xe6\x8b\xbc"},
    {0x2F8BB, "\xe6\x8d\xa8"},
    {0x2F8BC, "\xe6\x8e\x83"},
    {0x2F8BD, "\xe6\x8f\xa4"},
    {0x2F8BE, "\xf0\xa2\xaf\xb1"},
    {0x2F8BF, "\xe6\x90\xa2"},
    {0x2F8C0, "\xe6\x8f\x85"},
    {0x2F8C1, "\xe6\x8e\xa9"},
    {0x2F8C2, "\xe3\xa8\xae"},
    {0x2F8C3, "\xe6\x91\xa9"},
    {0x2F8C4, "\xe6\x91\xbe"},
    {0x2F8C5, "\xe6\x92\x9d"},
    {0x2F8C6, "\xe6\x91\xb7"},
    {0x2F8C7, "\xe3\xa9\xac"},
    {0x2F8C8, "\xe6\x95\x8f"},
    {0x2F8C9, "\xe6\x95\xac"},
    {0x2F8CA, "\xf0\xa3\x80\x8a"},
    {0x2F8CB, "\xe6\x97\xa3"},
    {0x2F8CC, "\xe6\x9b\xb8"},
    {0x2F8CD, "\xe6\x99\x89"},
    {0x2F8CE, "\xe3\xac\x99"},
    {0x2F8CF, "\xe6\x9a\x91"},
    {0x2F8D0, "\xe3\xac\x88"},
    {0x2F8D1, "\xe3\xab\xa4"},
    {0x2F8D2, "\xe5\x86\x92"},
    {0x2F8D3, "\xe5\x86\x95"},
    {0x2F8D4, "\xe6\x9c\x80"},
    {0x2F8D5, "\xe6\x9a\x9c"},
    {0x2F8D6, "\xe8\x82\xad"},
    {0x2F8D7, "\xe4\x8f\x99"},
    {0x2F8D8, "\xe6\x9c\x97"},
    {0x2F8D9, "\xe6\x9c\x9b"},
    {0x2F8DA, "\xe6\x9c\xa1"},
    {0x2F8DB, "\xe6\x9d\x9e"},
    {0x2F8DC, "\xe6\x9d\x93"},
    {0x2F8DD, "\xf0\xa3\x8f\x83"},
    {0x2F8DE, "\xe3\xad\x89"},
    {0x2F8DF, "\xe6\x9f\xba"},
    {0x2F8E0, "\xe6\x9e\x85"},
    {0x2F8E1, "\xe6\xa1\x92"},
    {0x2F8E2, "\xe6\xa2\x85"},
    {0x2F8E3, "\xf0\xa3\x91\xad"},
    {0x2F8E4, "\xe6\xa2\x8e"},
    {0x2F8E5, "\xe6\xa0\x9f"},
    {0x2F8E6, "\xe6\xa4\x94"},
    {0x2F8E7, "\xe3\xae\x9d"},
    {0x2F8E8, "\xe6\xa5\x82"},
    {0x2F8E9, "\xe6\xa6\xa3"},
    {0x2F8EA, "\xe6\xa7\xaa"},
    {0x2F8EB, "\xe6\xaa\xa8"},
    {0x2F8EC, "\xf0\xa3\x9a\xa3"},
    {0x2F8ED, "\xe6\xab\x9b"},
    {0x2F8EE, "\xe3\xb0\x98"},
    {0x2F8EF, "\xe6\xac\xa1"},
    {0x2F8F0, "\xf0\xa3\xa2\xa7"},
    {0x2F8F1, "\xe6\xad\x94"},
    {0x2F8F2, "\xe3\xb1\x8e"},
    {0x2F8F3, "\xe6\xad\xb2"},
    {0x2F8F4, "\xe6\xae\x9f"},
    {0x2F8F5, "\xe6\xae\xba"},
    {0x2F8F6, "\xe6\xae\xbb"},
    {0x2F8F7, "\xf0\xa3\xaa\x8d"},
    {0x2F8F8, "\xf0\xa1\xb4\x8b"},
    {0x2F8F9, "\xf0\xa3\xab\xba"},
    {0x2F8FA, "\xe6\xb1\x8e"},
    {0x2F8FB, "\xf0\xa3\xb2\xbc"},
    {0x2F8FC, "\xe6\xb2\xbf"},
    {0x2F8FD, "\xe6\xb3\x8d"},
    {0x2F8FE, "\xe6\xb1\xa7"},
    {0x2F8FF, "\xe6\xb4\x96"},
    {0x2F900, "\xe6\xb4\xbe"},
    {0x2F901, "\xe6\xb5\xb7"},
    {0x2F902, "\xe6\xb5\x81"},
    {0x2F903, "\xe6\xb5\xa9"},
    {0x2F904, "\xe6\xb5\xb8"},
    {0x2F905, "\xe6\xb6\x85"},
    {0x2F906, "\xf0\xa3\xb4\x9e"},
    {0x2F907, "\xe6\xb4\xb4"},
    {0x2F908, "\xe6\xb8\xaf"},
    {0x2F909, "\xe6\xb9\xae"},
    {0x2F90A, "\xe3\xb4\xb3"},
    {0x2F90B, "\xe6\xbb\x8b"},
    {0x2F90C, "\xe6\xbb\x87"},
    {0x2F90D, "\xf0\xa3\xbb\x91"},
    {0x2F90E, "\xe6\xb7\xb9"},
    {0x2F90F, "\xe6\xbd\xae"},
    {0x2F910, "\xf0\xa3\xbd\x9e"},
    {0x2F911, "\xf0\xa3\xbe\x8e"},
    {0x2F912, "\xe6\xbf\x86"},
    {0x2F913, "\xe7\x80\xb9"},
    {0x2F914, "\xe7\x80\x9e"},
    {0x2F915, "\xe7\x80\x9b"},
    {0x2F916, "\xe3\xb6\x96"},
    {0x2F917, "\xe7\x81\x8a"},
    {0x2F918, "\xe7\x81\xbd"},
    {0x2F919, "\xe7\x81\xb7"},
    {0x2F91A, "\xe7\x82\xad"},
    {0x2F91B, "\xf0\xa0\x94\xa5"},
    {0x2F91C, "\xe7\x85\x85"},
    {0x2F91D, "\xf0\xa4\x89\xa3"},
    {0x2F91E, "\xe7\x86\x9c"},
    {0x2F91F, "\xf0\xa4\x8e\xab"},
    {0x2F920, "\xe7\x88\xa8"},
    {0x2F921, "\xe7\x88\xb5"},
    {0x2F922, "\xe7\x89\x90"},
    {0x2F923, "\xf0\xa4\x98\x88"},
    {0x2F924, "\xe7\x8a\x80"},
    {0x2F925, "\xe7\x8a\x95"},
    {0x2F926, "\xf0\xa4\x9c\xb5"},
    {0x2F927, "\xf0\xa4\xa0\x94"},
    {0x2F928, "\xe7\x8d\xba"},
    {0x2F929, "\xe7\x8e\x8b"},
    {0x2F92A, "\xe3\xba\xac"},
    {0x2F92B, "\xe7\x8e\xa5"},
    {0x2F92C, "\xe3\xba\xb8"},
    {0x2F92D, "\xe3\xba\xb8"},
    {0x2F92E, "\xe7\x91\x87"},
    {0x2F92F, "\xe7\x91\x9c"},
    {0x2F930, "\xe7\x91\xb1"},
    {0x2F931, "\xe7\x92\x85"},
    {0x2F932, "\xe7\x93\x8a"},
    {0x2F933, "\xe3\xbc\x9b"},
    {0x2F934, "\xe7\x94\xa4"},
    {0x2F935, "\xf0\xa4\xb0\xb6"},
    {0x2F936, "\xe7\x94\xbe"},
    {0x2F937, "\xf0\xa4\xb2\x92"},
    {0x2F938, "\xe7\x95\xb0"},
    {0x2F939, "\xf0\xa2\x86\x9f"},
    {0x2F93A, "\xe7\x98\x90"},
    {0x2F93B, "\xf0\xa4\xbe\xa1"},
    {0x2F93C, "\xf0\xa4\xbe\xb8"},
    {0x2F93D, "\xf0\xa5\x81\x84"},
    {0x2F93E, "\xe3\xbf\xbc"},
    {0x2F93F, "\xe4\x80\x88"},
    {0x2F940, "\xe7\x9b\xb4"},
    {0x2F941, "\xf0\xa5\x83\xb3"},
    {0x2F942, "\xf0\xa5\x83\xb2"},
    {0x2F943, "\xf0\xa5\x84\x99"},
    {0x2F944, "\xf0\xa5\x84\xb3"},
    {0x2F945, "\xe7\x9c\x9e"},
    {0x2F946, "\xe7\x9c\x9f"},
    {0x2F947, "\xe7\x9c\x9f"},
    {0x2F948, "\xe7\x9d\x8a"},
    {0x2F949, "\xe4\x80\xb9"},
    {0x2F94A, "\xe7\x9e\x8b"},
    {0x2F94B, "\xe4\x81\x86"},
    {0x2F94C, "\xe4\x82\x96"},
    {0x2F94D, "\xf0\xa5\x90\x9d"},
    {0x2F94E, "\xe7\xa1\x8e"},
    {0x2F94F, "\xe7\xa2\x8c"},
    {0x2F950, "\xe7\xa3\x8c"},
    {0x2F951, "\xe4\x83\xa3"},
    {0x2F952, "\xf0\xa5\x98\xa6"},
    {0x2F953, "\xe7\xa5\x96"},
    {0x2F954, "\xf0\xa5\x9a\x9a"},
    {0x2F955, "\xf0\xa5\x9b\x85"},
    {0x2F956, "\xe7\xa6\x8f"},
    {0x2F957, "\xe7\xa7\xab"},
    {0x2F958, "\xe4\x84\xaf"},
    {0x2F959, "\xe7\xa9\x80"},
    {0x2F95A, "\xe7\xa9\x8a"},
    {0x2F95B, "\xe7\xa9\x8f"},
    {0x2F95C, "\xf0\xa5\xa5\xbc"},
    {0x2F95D, "\xf0\xa5\xaa\xa7"},
    {0x2F95E, "\xf0\xa5\xaa\xa7"},
    {0x2F95F, "\xe7\xab\xae"},
    {0x2F960, "\xe4\x88\x82"},
    {0x2F961, "\xf0\xa5\xae\xab"},
    {0x2F962, "\xe7\xaf\x86"},
    {0x2F963, "\xe7\xaf\x89"},
    {0x2F964, "\xe4\x88\xa7"},
    {0x2F965, "\xf0\xa5\xb2\x80"},
    {0x2F966, "\xe7\xb3\x92"},
    {0x2F967, "\xe4\x8a\xa0"},
    {0x2F968, "\xe7\xb3\xa8"},
    {0x2F969, "\xe7\xb3\xa3"},
    {0x2F96A, "\xe7\xb4\x80"},
    {0x2F96B, "\xf0\xa5\xbe\x86"},
    {0x2F96C, "\xe7\xb5\xa3"},
    {0x2F96D, "\xe4\x8c\x81"},
    {0x2F96E, "\xe7\xb7\x87"},
    {0x2F96F, "\xe7\xb8\x82"},
    {0x2F970, "\xe7\xb9\x85"},
    {0x2F971, "\xe4\x8c\xb4"},
    {0x2F972, "\xf0\xa6\x88\xa8"},
    {0x2F973, "\xf0\xa6\x89\x87"},
    {0x2F974, "\xe4\x8d\x99"},
    {0x2F975, "\xf0\xa6\x8b\x99"},
    {0x2F976, "\xe7\xbd\xba"},
    {0x2F977, "\xf0\xa6\x8c\xbe"},
    {0x2F978, "\xe7\xbe\x95"},
    {0x2F979, "\xe7\xbf\xba"},
    {0x2F97A, "\xe8\x80\x85"},
    {0x2F97B, "\xf0\xa6\x93\x9a"},
    {0x2F97C, "\xf0\xa6\x94\xa3"},
    {0x2F97D, "\xe8\x81\xa0"},
    {0x2F97E, "\xf0\xa6\x96\xa8"},
    {0x2F97F, "\xe8\x81\xb0"},
    {0x2F980, "\xf0\xa3\x8d\x9f"},
    {0x2F981, "\xe4\x8f\x95"},
    {0x2F982, "\xe8\x82\xb2"},
    {0x2F983, "\xe8\x84\x83"},
    {0x2F984, "\xe4\x90\x8b"},
    {0x2F985, "\xe8\x84\xbe"},
    {0x2F986, "\xe5\xaa\xb5"},
    {0x2F987, "\xf0\xa6\x9e\xa7"},
    {0x2F988, "\xf0\xa6\x9e\xb5"},
    {0x2F989, "\xf0\xa3\x8e\x93"},
    {0x2F98A, "\xf0\xa3\x8e\x9c"},
    {0x2F98B, "\xe8\x88\x81"},
    {0x2F98C, "\xe8\x88\x84"},
    {0x2F98D, "\xe8\xbe\x9e"},
    {0x2F98E, "\xe4\x91\xab"},
    {0x2F98F, "\xe8\x8a\x91"},
    {0x2F990, "\xe8\x8a\x8b"},
    {0x2F991, "\xe8\x8a\x9d"},
    {0x2F992, "\xe5\x8a\xb3"},
    {0x2F993, "\xe8\x8a\xb1"},
    {0x2F994, "\xe8\x8a\xb3"},
    {0x2F995, "\xe8\x8a\xbd"},
    {0x2F996, "\xe8\x8b\xa6"},
    {0x2F997, "\xf0\xa6\xac\xbc"},
    {0x2F998, "\xe8\x8b\xa5"},
    {0x2F999, "\xe8\x8c\x9d"},
    {0x2F99A, "\xe8\x8d\xa3"},
    {0x2F99B, "\xe8\x8e\xad"},
    {0x2F99C, "\xe8\x8c\xa3"},
    {0x2F99D, "\xe8\x8e\xbd"},
    {0x2F99E, "\xe8\x8f\xa7"},
    {0x2F99F, "\xe8\x91\x97"},
    {0x2F9A0, "\xe8\x8d\x93"},
    {0x2F9A1, "\xe8\x8f\x8a"},
    {0x2F9A2, "\xe8\x8f\x8c"},
    {0x2F9A3, "\xe8\x8f\x9c"},
    {0x2F9A4, "\xf0\xa6\xb0\xb6"},
    {0x2F9A5, "\xf0\xa6\xb5\xab"},
    {0x2F9A6, "\xf0\xa6\xb3\x95"},
    {0x2F9A7, "\xe4\x94\xab"},
    {0x2F9A8, "\xe8\x93\xb1"},
    {0x2F9A9, "\xe8\x93\xb3"},
    {0x2F9AA, "\xe8\x94\x96"},
    {0x2F9AB, "\xf0\xa7\x8f\x8a"},
    {0x2F9AC, "\xe8\x95\xa4"},
    {0x2F9AD, "\xf0\xa6\xbc\xac"},
    {0x2F9AE, "\xe4\x95\x9d"},
    {0x2F9AF, "\xe4\x95\xa1"},
    {0x2F9B0, "\xf0\xa6\xbe\xb1"},
    {0x2F9B1, "\xf0\xa7\x83\x92"},
    {0x2F9B2, "\xe4\x95\xab"},
    {0x2F9B3, "\xe8\x99\x90"},
    {0x2F9B4, "\xe8\x99\x9c"},
    {0x2F9B5, "\xe8\x99\xa7"},
    {0x2F9B6, "\xe8\x99\xa9"},
    {0x2F9B7, "\xe8\x9a\xa9"},
    {0x2F9B8, "\xe8\x9a\x88"},
    {0x2F9B9, "\xe8\x9c\x8e"},
    {0x2F9BA, "\xe8\x9b\xa2"},
    {0x2F9BB, "\xe8\x9d\xb9"},
    {0x2F9BC, "\xe8\x9c\xa8"},
    {0x2F9BD, "\xe8\x9d\xab"},
    {0x2F9BE, "\xe8\x9e\x86"},
    {0x2F9BF, "\xe4\x97\x97"},
    {0x2F9C0, "\xe8\x9f\xa1"},
    {0x2F9C1, "\xe8\xa0\x81"},
    {0x2F9C2, "\xe4\x97\xb9"},
    {0x2F9C3, "\xe8\xa1\xa0"},
    {0x2F9C4, "\xe8\xa1\xa3"},
    {0x2F9C5, "\xf0\xa7\x99\xa7"},
    {0x2F9C6, "\xe8\xa3\x97"},
    {0x2F9C7, "\xe8\xa3\x9e"},
    {0x2F9C8, "\xe4\x98\xb5"},
    {0x2F9C9, "\xe8\xa3\xba"},
    {0x2F9CA, "\xe3\x92\xbb"},
    {0x2F9CB, "\xf0\xa7\xa2\xae"},
    {0x2F9CC, "\xf0\xa7\xa5\xa6"},
    {0x2F9CD, "\xe4\x9a\xbe"},
    {0x2F9CE, "\xe4\x9b\x87"},
    {0x2F9CF, "\xe8\xaa\xa0"},
    {0x2F9D0, "\xe8\xab\xad"},
    {0x2F9D1, "\xe8\xae\x8a"},
    {0x2F9D2, "\xe8\xb1\x95"},
    {0x2F9D3, "\xf0\xa7\xb2\xa8"},
    {0x2F9D4, "\xe8\xb2\xab"},
    {0x2F9D5, "\xe8\xb3\x81"},
    {0x2F9D6, "\xe8\xb4\x9b"},
    {0x2F9D7, "\xe8\xb5\xb7"},
    {0x2F9D8, "\xf0\xa7\xbc\xaf"},
    {0x2F9D9, "\xf0\xa0\xa0\x84"},
    {0x2F9DA, "\xe8\xb7\x8b"},
    {0x2F9DB, "\xe8\xb6\xbc"},
    {0x2F9DC, "\xe8\xb7\xb0"},
    {0x2F9DD, "\xf0\xa0\xa3\x9e"},
    {0x2F9DE, "\xe8\xbb\x94"},
    {0x2F9DF, "\xe8\xbc\xb8"},
    {0x2F9E0, "\xf0\xa8\x97\x92"},
    {0x2F9E1, "\xf0\xa8\x97\xad"},
    {0x2F9E2, "\xe9\x82\x94"},
    {0x2F9E3, "\xe9\x83\xb1"},
    {0x2F9E4, "\xe9\x84\x91"},
    {0x2F9E5, "\xf0\xa8\x9c\xae"},
    {0x2F9E6, "\xe9\x84\x9b"},
    {0x2F9E7, "\xe9\x88\xb8"},
    {0x2F9E8, "\xe9\x8b\x97"},
    {0x2F9E9, "\xe9\x8b\x98"},
    {0x2F9EA, "\xe9\x89\xbc"},
    {0x2F9EB, "\xe9\x8f\xb9"},
    {0x2F9EC, "\xe9\x90\x95"},
    {0x2F9ED, "\xf0\xa8\xaf\xba"},
    {0x2F9EE, "\xe9\x96\x8b"},
    {0x2F9EF, "\xe4\xa6\x95"},
    {0x2F9F0, "\xe9\x96\xb7"},
    {0x2F9F1, "\xf0\xa8\xb5\xb7"},
    {0x2F9F2, "\xe4\xa7\xa6"},
    {0x2F9F3, "\xe9\x9b\x83"},
    {0x2F9F4, "\xe5\xb6\xb2"},
    {0x2F9F5, "\xe9\x9c\xa3"},
    {0x2F9F6, "\xf0\xa9\x85\x85"},
    {0x2F9F7, "\xf0\xa9\x88\x9a"},
    {0x2F9F8, "\xe4\xa9\xae"},
    {0x2F9F9, "\xe4\xa9\xb6"},
    {0x2F9FA, "\xe9\x9f\xa0"},
    {0x2F9FB, "\xf0\xa9\x90\x8a"},
    {0x2F9FC, "\xe4\xaa\xb2"},
    {0x2F9FD, "\xf0\xa9\x92\x96"},
    {0x2F9FE, "\xe9\xa0\x8b"},
    {0x2F9FF, "\xe9\xa0\x8b"},
    {0x2FA00, "\xe9\xa0\xa9"},
    {0x2FA01, "\xf0\xa9\x96\xb6"},
    {0x2FA02, "\xe9\xa3\xa2"},
    {0x2FA03, "\xe4\xac\xb3"},
    {0x2FA04, "\xe9\xa4\xa9"},
    {0x2FA05, "\xe9\xa6\xa7"},
    {0x2FA06, "\xe9\xa7\x82"},
    {0x2FA07, "\xe9\xa7\xbe"},
    {0x2FA08, "\xe4\xaf\x8e"},
    {0x2FA09, "\xf0\xa9\xac\xb0"},
    {0x2FA0A, "\xe9\xac\x92"},
    {0x2FA0B, "\xe9\xb1\x80"},
    {0x2FA0C, "\xe9\xb3\xbd"},
    {0x2FA0D, "\xe4\xb3\x8e"},
    {0x2FA0E, "\xe4\xb3\xad"},
    {0x2FA0F, "\xe9\xb5\xa7"},
    {0x2FA10, "\xf0\xaa\x83\x8e"},
    {0x2FA11, "\xe4\xb3\xb8"},
    {0x2FA12, "\xf0\xaa\x84\x85"},
    {0x2FA13, "\xf0\xaa\x88\x8e"},
    {0x2FA14, "\xf0\xaa\x8a\x91"},
    {0x2FA15, "\xe9\xba\xbb"},
    {0x2FA16, "\xe4\xb5\x96"},
    {0x2FA17, "\xe9\xbb\xb9"},
    {0x2FA18, "\xe9\xbb\xbe"},
    {0x2FA19, "\xe9\xbc\x85"},
    {0x2FA1A, "\xe9\xbc\x8f"},
    {0x2FA1B, "\xe9\xbc\x96"},
    {0x2FA1C, "\xe9\xbc\xbb"},
    {0x2FA1D, "\xf0\xaa\x98\x80"},
};

}  // namespace bitext::tables

#endif  // BITEXT_UNICODE_TABLES_HPP
