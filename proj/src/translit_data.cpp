// Generated by tools/gen_translit_data.py -- do not edit by hand.
// Unicode data from Python unicodedata (UCD 13.0.0).

#include "translit_data.hpp"

namespace bioc::translit::detail {

const FoldEntry kExplicit[] = {
    {0x000A0, " "},
    {0x000A9, "(c)"},
    {0x000AE, "(R)"},
    {0x000B0, " degrees"},
    {0x000B1, "+/-"},
    {0x000D7, "x"},
    {0x000F7, "/"},
    {0x00391, "alpha"},
    {0x00392, "beta"},
    {0x00393, "gamma"},
    {0x00394, "delta"},
    {0x00395, "epsilon"},
    {0x00396, "zeta"},
    {0x00397, "eta"},
    {0x00398, "theta"},
    {0x00399, "iota"},
    {0x0039A, "kappa"},
    {0x0039B, "lambda"},
    {0x0039C, "mu"},
    {0x0039D, "nu"},
    {0x0039E, "xi"},
    {0x0039F, "omicron"},
    {0x003A0, "pi"},
    {0x003A1, "rho"},
    {0x003A3, "sigma"},
    {0x003A4, "tau"},
    {0x003A5, "upsilon"},
    {0x003A6, "phi"},
    {0x003A7, "chi"},
    {0x003A8, "psi"},
    {0x003A9, "omega"},
    {0x003B1, "alpha"},
    {0x003B2, "beta"},
    {0x003B3, "gamma"},
    {0x003B4, "delta"},
    {0x003B5, "epsilon"},
    {0x003B6, "zeta"},
    {0x003B7, "eta"},
    {0x003B8, "theta"},
    {0x003B9, "iota"},
    {0x003BA, "kappa"},
    {0x003BB, "lambda"},
    {0x003BC, "mu"},
    {0x003BD, "nu"},
    {0x003BE, "xi"},
    {0x003BF, "omicron"},
    {0x003C0, "pi"},
    {0x003C1, "rho"},
    {0x003C2, "sigma"},
    {0x003C3, "sigma"},
    {0x003C4, "tau"},
    {0x003C5, "upsilon"},
    {0x003C6, "phi"},
    {0x003C7, "chi"},
    {0x003C8, "psi"},
    {0x003C9, "omega"},
    {0x02010, "-"},
    {0x02011, "-"},
    {0x02012, "-"},
    {0x02013, "-"},
    {0x02014, "-"},
    {0x02015, "-"},
    {0x02018, "'"},
    {0x02019, "'"},
    {0x0201A, "'"},
    {0x0201B, "'"},
    {0x0201C, "\""},
    {0x0201D, "\""},
    {0x0201E, "\""},
    {0x0201F, "\""},
    {0x02022, "*"},
    {0x02026, "..."},
    {0x02032, "'"},
    {0x02033, "\""},
    {0x02044, "/"},
    {0x02190, "<-"},
    {0x02192, "->"},
    {0x02212, "-"},
    {0x02248, "~"},
    {0x02260, "!="},
    {0x02264, "<="},
    {0x02265, ">="},
};
const std::size_t kExplicitCount = sizeof(kExplicit) / sizeof(kExplicit[0]);

const FoldEntry kFold[] = {
    {0x000A8, " "},
    {0x000AA, "a"},
    {0x000AF, " "},
    {0x000B2, "2"},
    {0x000B3, "3"},
    {0x000B4, " "},
    {0x000B5, "mu"},
    {0x000B8, " "},
    {0x000B9, "1"},
    {0x000BA, "o"},
    {0x000BC, "1/4"},
    {0x000BD, "1/2"},
    {0x000BE, "3/4"},
    {0x000C0, "A"},
    {0x000C1, "A"},
    {0x000C2, "A"},
    {0x000C3, "A"},
    {0x000C4, "A"},
    {0x000C5, "A"},
    {0x000C7, "C"},
    {0x000C8, "E"},
    {0x000C9, "E"},
    {0x000CA, "E"},
    {0x000CB, "E"},
    {0x000CC, "I"},
    {0x000CD, "I"},
    {0x000CE, "I"},
    {0x000CF, "I"},
    {0x000D1, "N"},
    {0x000D2, "O"},
    {0x000D3, "O"},
    {0x000D4, "O"},
    {0x000D5, "O"},
    {0x000D6, "O"},
    {0x000D9, "U"},
    {0x000DA, "U"},
    {0x000DB, "U"},
    {0x000DC, "U"},
    {0x000DD, "Y"},
    {0x000E0, "a"},
    {0x000E1, "a"},
    {0x000E2, "a"},
    {0x000E3, "a"},
    {0x000E4, "a"},
    {0x000E5, "a"},
    {0x000E7, "c"},
    {0x000E8, "e"},
    {0x000E9, "e"},
    {0x000EA, "e"},
    {0x000EB, "e"},
    {0x000EC, "i"},
    {0x000ED, "i"},
    {0x000EE, "i"},
    {0x000EF, "i"},
    {0x000F1, "n"},
    {0x000F2, "o"},
    {0x000F3, "o"},
    {0x000F4, "o"},
    {0x000F5, "o"},
    {0x000F6, "o"},
    {0x000F9, "u"},
    {0x000FA, "u"},
    {0x000FB, "u"},
    {0x000FC, "u"},
    {0x000FD, "y"},
    {0x000FF, "y"},
    {0x00100, "A"},
    {0x00101, "a"},
    {0x00102, "A"},
    {0x00103, "a"},
    {0x00104, "A"},
    {0x00105, "a"},
    {0x00106, "C"},
    {0x00107, "c"},
    {0x00108, "C"},
    {0x00109, "c"},
    {0x0010A, "C"},
    {0x0010B, "c"},
    {0x0010C, "C"},
    {0x0010D, "c"},
    {0x0010E, "D"},
    {0x0010F, "d"},
    {0x00112, "E"},
    {0x00113, "e"},
    {0x00114, "E"},
    {0x00115, "e"},
    {0x00116, "E"},
    {0x00117, "e"},
    {0x00118, "E"},
    {0x00119, "e"},
    {0x0011A, "E"},
    {0x0011B, "e"},
    {0x0011C, "G"},
    {0x0011D, "g"},
    {0x0011E, "G"},
    {0x0011F, "g"},
    {0x00120, "G"},
    {0x00121, "g"},
    {0x00122, "G"},
    {0x00123, "g"},
    {0x00124, "H"},
    {0x00125, "h"},
    {0x00128, "I"},
    {0x00129, "i"},
    {0x0012A, "I"},
    {0x0012B, "i"},
    {0x0012C, "I"},
    {0x0012D, "i"},
    {0x0012E, "I"},
    {0x0012F, "i"},
    {0x00130, "I"},
    {0x00132, "IJ"},
    {0x00133, "ij"},
    {0x00134, "J"},
    {0x00135, "j"},
    {0x00136, "K"},
    {0x00137, "k"},
    {0x00139, "L"},
    {0x0013A, "l"},
    {0x0013B, "L"},
    {0x0013C, "l"},
    {0x0013D, "L"},
    {0x0013E, "l"},
    {0x00143, "N"},
    {0x00144, "n"},
    {0x00145, "N"},
    {0x00146, "n"},
    {0x00147, "N"},
    {0x00148, "n"},
    {0x0014C, "O"},
    {0x0014D, "o"},
    {0x0014E, "O"},
    {0x0014F, "o"},
    {0x00150, "O"},
    {0x00151, "o"},
    {0x00154, "R"},
    {0x00155, "r"},
    {0x00156, "R"},
    {0x00157, "r"},
    {0x00158, "R"},
    {0x00159, "r"},
    {0x0015A, "S"},
    {0x0015B, "s"},
    {0x0015C, "S"},
    {0x0015D, "s"},
    {0x0015E, "S"},
    {0x0015F, "s"},
    {0x00160, "S"},
    {0x00161, "s"},
    {0x00162, "T"},
    {0x00163, "t"},
    {0x00164, "T"},
    {0x00165, "t"},
    {0x00168, "U"},
    {0x00169, "u"},
    {0x0016A, "U"},
    {0x0016B, "u"},
    {0x0016C, "U"},
    {0x0016D, "u"},
    {0x0016E, "U"},
    {0x0016F, "u"},
    {0x00170, "U"},
    {0x00171, "u"},
    {0x00172, "U"},
    {0x00173, "u"},
    {0x00174, "W"},
    {0x00175, "w"},
    {0x00176, "Y"},
    {0x00177, "y"},
    {0x00178, "Y"},
    {0x00179, "Z"},
    {0x0017A, "z"},
    {0x0017B, "Z"},
    {0x0017C, "z"},
    {0x0017D, "Z"},
    {0x0017E, "z"},
    {0x0017F, "s"},
    {0x001A0, "O"},
    {0x001A1, "o"},
    {0x001AF, "U"},
    {0x001B0, "u"},
    {0x001C4, "DZ"},
    {0x001C5, "Dz"},
    {0x001C6, "dz"},
    {0x001C7, "LJ"},
    {0x001C8, "Lj"},
    {0x001C9, "lj"},
    {0x001CA, "NJ"},
    {0x001CB, "Nj"},
    {0x001CC, "nj"},
    {0x001CD, "A"},
    {0x001CE, "a"},
    {0x001CF, "I"},
    {0x001D0, "i"},
    {0x001D1, "O"},
    {0x001D2, "o"},
    {0x001D3, "U"},
    {0x001D4, "u"},
    {0x001D5, "U"},
    {0x001D6, "u"},
    {0x001D7, "U"},
    {0x001D8, "u"},
    {0x001D9, "U"},
    {0x001DA, "u"},
    {0x001DB, "U"},
    {0x001DC, "u"},
    {0x001DE, "A"},
    {0x001DF, "a"},
    {0x001E0, "A"},
    {0x001E1, "a"},
    {0x001E6, "G"},
    {0x001E7, "g"},
    {0x001E8, "K"},
    {0x001E9, "k"},
    {0x001EA, "O"},
    {0x001EB, "o"},
    {0x001EC, "O"},
    {0x001ED, "o"},
    {0x001F0, "j"},
    {0x001F1, "DZ"},
    {0x001F2, "Dz"},
    {0x001F3, "dz"},
    {0x001F4, "G"},
    {0x001F5, "g"},
    {0x001F8, "N"},
    {0x001F9, "n"},
    {0x001FA, "A"},
    {0x001FB, "a"},
    {0x00200, "A"},
    {0x00201, "a"},
    {0x00202, "A"},
    {0x00203, "a"},
    {0x00204, "E"},
    {0x00205, "e"},
    {0x00206, "E"},
    {0x00207, "e"},
    {0x00208, "I"},
    {0x00209, "i"},
    {0x0020A, "I"},
    {0x0020B, "i"},
    {0x0020C, "O"},
    {0x0020D, "o"},
    {0x0020E, "O"},
    {0x0020F, "o"},
    {0x00210, "R"},
    {0x00211, "r"},
    {0x00212, "R"},
    {0x00213, "r"},
    {0x00214, "U"},
    {0x00215, "u"},
    {0x00216, "U"},
    {0x00217, "u"},
    {0x00218, "S"},
    {0x00219, "s"},
    {0x0021A, "T"},
    {0x0021B, "t"},
    {0x0021E, "H"},
    {0x0021F, "h"},
    {0x00226, "A"},
    {0x00227, "a"},
    {0x00228, "E"},
    {0x00229, "e"},
    {0x0022A, "O"},
    {0x0022B, "o"},
    {0x0022C, "O"},
    {0x0022D, "o"},
    {0x0022E, "O"},
    {0x0022F, "o"},
    {0x00230, "O"},
    {0x00231, "o"},
    {0x00232, "Y"},
    {0x00233, "y"},
    {0x002B0, "h"},
    {0x002B2, "j"},
    {0x002B3, "r"},
    {0x002B7, "w"},
    {0x002B8, "y"},
    {0x002D8, " "},
    {0x002D9, " "},
    {0x002DA, " "},
    {0x002DB, " "},
    {0x002DC, " "},
    {0x002DD, " "},
    {0x002E1, "l"},
    {0x002E2, "s"},
    {0x002E3, "x"},
    {0x0037A, " "},
    {0x0037E, ";"},
    {0x00384, " "},
    {0x00385, " "},
    {0x00386, "alpha"},
    {0x00388, "epsilon"},
    {0x00389, "eta"},
    {0x0038A, "iota"},
    {0x0038C, "omicron"},
    {0x0038E, "upsilon"},
    {0x0038F, "omega"},
    {0x00390, "iota"},
    {0x003AA, "iota"},
    {0x003AB, "upsilon"},
    {0x003AC, "alpha"},
    {0x003AD, "epsilon"},
    {0x003AE, "eta"},
    {0x003AF, "iota"},
    {0x003B0, "upsilon"},
    {0x003CA, "iota"},
    {0x003CB, "upsilon"},
    {0x003CC, "omicron"},
    {0x003CD, "upsilon"},
    {0x003CE, "omega"},
    {0x003D0, "beta"},
    {0x003D1, "theta"},
    {0x003D2, "upsilon"},
    {0x003D3, "upsilon"},
    {0x003D4, "upsilon"},
    {0x003D5, "phi"},
    {0x003D6, "pi"},
    {0x003F0, "kappa"},
    {0x003F1, "rho"},
    {0x003F2, "sigma"},
    {0x003F4, "theta"},
    {0x003F5, "epsilon"},
    {0x003F9, "sigma"},
    {0x01D2C, "A"},
    {0x01D2E, "B"},
    {0x01D30, "D"},
    {0x01D31, "E"},
    {0x01D33, "G"},
    {0x01D34, "H"},
    {0x01D35, "I"},
    {0x01D36, "J"},
    {0x01D37, "K"},
    {0x01D38, "L"},
    {0x01D39, "M"},
    {0x01D3A, "N"},
    {0x01D3C, "O"},
    {0x01D3E, "P"},
    {0x01D3F, "R"},
    {0x01D40, "T"},
    {0x01D41, "U"},
    {0x01D42, "W"},
    {0x01D43, "a"},
    {0x01D47, "b"},
    {0x01D48, "d"},
    {0x01D49, "e"},
    {0x01D4D, "g"},
    {0x01D4F, "k"},
    {0x01D50, "m"},
    {0x01D52, "o"},
    {0x01D56, "p"},
    {0x01D57, "t"},
    {0x01D58, "u"},
    {0x01D5B, "v"},
    {0x01D5D, "beta"},
    {0x01D5E, "gamma"},
    {0x01D5F, "delta"},
    {0x01D60, "phi"},
    {0x01D61, "chi"},
    {0x01D62, "i"},
    {0x01D63, "r"},
    {0x01D64, "u"},
    {0x01D65, "v"},
    {0x01D66, "beta"},
    {0x01D67, "gamma"},
    {0x01D68, "rho"},
    {0x01D69, "phi"},
    {0x01D6A, "chi"},
    {0x01D9C, "c"},
    {0x01DA0, "f"},
    {0x01DBB, "z"},
    {0x01DBF, "theta"},
    {0x01E00, "A"},
    {0x01E01, "a"},
    {0x01E02, "B"},
    {0x01E03, "b"},
    {0x01E04, "B"},
    {0x01E05, "b"},
    {0x01E06, "B"},
    {0x01E07, "b"},
    {0x01E08, "C"},
    {0x01E09, "c"},
    {0x01E0A, "D"},
    {0x01E0B, "d"},
    {0x01E0C, "D"},
    {0x01E0D, "d"},
    {0x01E0E, "D"},
    {0x01E0F, "d"},
    {0x01E10, "D"},
    {0x01E11, "d"},
    {0x01E12, "D"},
    {0x01E13, "d"},
    {0x01E14, "E"},
    {0x01E15, "e"},
    {0x01E16, "E"},
    {0x01E17, "e"},
    {0x01E18, "E"},
    {0x01E19, "e"},
    {0x01E1A, "E"},
    {0x01E1B, "e"},
    {0x01E1C, "E"},
    {0x01E1D, "e"},
    {0x01E1E, "F"},
    {0x01E1F, "f"},
    {0x01E20, "G"},
    {0x01E21, "g"},
    {0x01E22, "H"},
    {0x01E23, "h"},
    {0x01E24, "H"},
    {0x01E25, "h"},
    {0x01E26, "H"},
    {0x01E27, "h"},
    {0x01E28, "H"},
    {0x01E29, "h"},
    {0x01E2A, "H"},
    {0x01E2B, "h"},
    {0x01E2C, "I"},
    {0x01E2D, "i"},
    {0x01E2E, "I"},
    {0x01E2F, "i"},
    {0x01E30, "K"},
    {0x01E31, "k"},
    {0x01E32, "K"},
    {0x01E33, "k"},
    {0x01E34, "K"},
    {0x01E35, "k"},
    {0x01E36, "L"},
    {0x01E37, "l"},
    {0x01E38, "L"},
    {0x01E39, "l"},
    {0x01E3A, "L"},
    {0x01E3B, "l"},
    {0x01E3C, "L"},
    {0x01E3D, "l"},
    {0x01E3E, "M"},
    {0x01E3F, "m"},
    {0x01E40, "M"},
    {0x01E41, "m"},
    {0x01E42, "M"},
    {0x01E43, "m"},
    {0x01E44, "N"},
    {0x01E45, "n"},
    {0x01E46, "N"},
    {0x01E47, "n"},
    {0x01E48, "N"},
    {0x01E49, "n"},
    {0x01E4A, "N"},
    {0x01E4B, "n"},
    {0x01E4C, "O"},
    {0x01E4D, "o"},
    {0x01E4E, "O"},
    {0x01E4F, "o"},
    {0x01E50, "O"},
    {0x01E51, "o"},
    {0x01E52, "O"},
    {0x01E53, "o"},
    {0x01E54, "P"},
    {0x01E55, "p"},
    {0x01E56, "P"},
    {0x01E57, "p"},
    {0x01E58, "R"},
    {0x01E59, "r"},
    {0x01E5A, "R"},
    {0x01E5B, "r"},
    {0x01E5C, "R"},
    {0x01E5D, "r"},
    {0x01E5E, "R"},
    {0x01E5F, "r"},
    {0x01E60, "S"},
    {0x01E61, "s"},
    {0x01E62, "S"},
    {0x01E63, "s"},
    {0x01E64, "S"},
    {0x01E65, "s"},
    {0x01E66, "S"},
    {0x01E67, "s"},
    {0x01E68, "S"},
    {0x01E69, "s"},
    {0x01E6A, "T"},
    {0x01E6B, "t"},
    {0x01E6C, "T"},
    {0x01E6D, "t"},
    {0x01E6E, "T"},
    {0x01E6F, "t"},
    {0x01E70, "T"},
    {0x01E71, "t"},
    {0x01E72, "U"},
    {0x01E73, "u"},
    {0x01E74, "U"},
    {0x01E75, "u"},
    {0x01E76, "U"},
    {0x01E77, "u"},
    {0x01E78, "U"},
    {0x01E79, "u"},
    {0x01E7A, "U"},
    {0x01E7B, "u"},
    {0x01E7C, "V"},
    {0x01E7D, "v"},
    {0x01E7E, "V"},
    {0x01E7F, "v"},
    {0x01E80, "W"},
    {0x01E81, "w"},
    {0x01E82, "W"},
    {0x01E83, "w"},
    {0x01E84, "W"},
    {0x01E85, "w"},
    {0x01E86, "W"},
    {0x01E87, "w"},
    {0x01E88, "W"},
    {0x01E89, "w"},
    {0x01E8A, "X"},
    {0x01E8B, "x"},
    {0x01E8C, "X"},
    {0x01E8D, "x"},
    {0x01E8E, "Y"},
    {0x01E8F, "y"},
    {0x01E90, "Z"},
    {0x01E91, "z"},
    {0x01E92, "Z"},
    {0x01E93, "z"},
    {0x01E94, "Z"},
    {0x01E95, "z"},
    {0x01E96, "h"},
    {0x01E97, "t"},
    {0x01E98, "w"},
    {0x01E99, "y"},
    {0x01E9B, "s"},
    {0x01EA0, "A"},
    {0x01EA1, "a"},
    {0x01EA2, "A"},
    {0x01EA3, "a"},
    {0x01EA4, "A"},
    {0x01EA5, "a"},
    {0x01EA6, "A"},
    {0x01EA7, "a"},
    {0x01EA8, "A"},
    {0x01EA9, "a"},
    {0x01EAA, "A"},
    {0x01EAB, "a"},
    {0x01EAC, "A"},
    {0x01EAD, "a"},
    {0x01EAE, "A"},
    {0x01EAF, "a"},
    {0x01EB0, "A"},
    {0x01EB1, "a"},
    {0x01EB2, "A"},
    {0x01EB3, "a"},
    {0x01EB4, "A"},
    {0x01EB5, "a"},
    {0x01EB6, "A"},
    {0x01EB7, "a"},
    {0x01EB8, "E"},
    {0x01EB9, "e"},
    {0x01EBA, "E"},
    {0x01EBB, "e"},
    {0x01EBC, "E"},
    {0x01EBD, "e"},
    {0x01EBE, "E"},
    {0x01EBF, "e"},
    {0x01EC0, "E"},
    {0x01EC1, "e"},
    {0x01EC2, "E"},
    {0x01EC3, "e"},
    {0x01EC4, "E"},
    {0x01EC5, "e"},
    {0x01EC6, "E"},
    {0x01EC7, "e"},
    {0x01EC8, "I"},
    {0x01EC9, "i"},
    {0x01ECA, "I"},
    {0x01ECB, "i"},
    {0x01ECC, "O"},
    {0x01ECD, "o"},
    {0x01ECE, "O"},
    {0x01ECF, "o"},
    {0x01ED0, "O"},
    {0x01ED1, "o"},
    {0x01ED2, "O"},
    {0x01ED3, "o"},
    {0x01ED4, "O"},
    {0x01ED5, "o"},
    {0x01ED6, "O"},
    {0x01ED7, "o"},
    {0x01ED8, "O"},
    {0x01ED9, "o"},
    {0x01EDA, "O"},
    {0x01EDB, "o"},
    {0x01EDC, "O"},
    {0x01EDD, "o"},
    {0x01EDE, "O"},
    {0x01EDF, "o"},
    {0x01EE0, "O"},
    {0x01EE1, "o"},
    {0x01EE2, "O"},
    {0x01EE3, "o"},
    {0x01EE4, "U"},
    {0x01EE5, "u"},
    {0x01EE6, "U"},
    {0x01EE7, "u"},
    {0x01EE8, "U"},
    {0x01EE9, "u"},
    {0x01EEA, "U"},
    {0x01EEB, "u"},
    {0x01EEC, "U"},
    {0x01EED, "u"},
    {0x01EEE, "U"},
    {0x01EEF, "u"},
    {0x01EF0, "U"},
    {0x01EF1, "u"},
    {0x01EF2, "Y"},
    {0x01EF3, "y"},
    {0x01EF4, "Y"},
    {0x01EF5, "y"},
    {0x01EF6, "Y"},
    {0x01EF7, "y"},
    {0x01EF8, "Y"},
    {0x01EF9, "y"},
    {0x01F00, "alpha"},
    {0x01F01, "alpha"},
    {0x01F02, "alpha"},
    {0x01F03, "alpha"},
    {0x01F04, "alpha"},
    {0x01F05, "alpha"},
    {0x01F06, "alpha"},
    {0x01F07, "alpha"},
    {0x01F08, "alpha"},
    {0x01F09, "alpha"},
    {0x01F0A, "alpha"},
    {0x01F0B, "alpha"},
    {0x01F0C, "alpha"},
    {0x01F0D, "alpha"},
    {0x01F0E, "alpha"},
    {0x01F0F, "alpha"},
    {0x01F10, "epsilon"},
    {0x01F11, "epsilon"},
    {0x01F12, "epsilon"},
    {0x01F13, "epsilon"},
    {0x01F14, "epsilon"},
    {0x01F15, "epsilon"},
    {0x01F18, "epsilon"},
    {0x01F19, "epsilon"},
    {0x01F1A, "epsilon"},
    {0x01F1B, "epsilon"},
    {0x01F1C, "epsilon"},
    {0x01F1D, "epsilon"},
    {0x01F20, "eta"},
    {0x01F21, "eta"},
    {0x01F22, "eta"},
    {0x01F23, "eta"},
    {0x01F24, "eta"},
    {0x01F25, "eta"},
    {0x01F26, "eta"},
    {0x01F27, "eta"},
    {0x01F28, "eta"},
    {0x01F29, "eta"},
    {0x01F2A, "eta"},
    {0x01F2B, "eta"},
    {0x01F2C, "eta"},
    {0x01F2D, "eta"},
    {0x01F2E, "eta"},
    {0x01F2F, "eta"},
    {0x01F30, "iota"},
    {0x01F31, "iota"},
    {0x01F32, "iota"},
    {0x01F33, "iota"},
    {0x01F34, "iota"},
    {0x01F35, "iota"},
    {0x01F36, "iota"},
    {0x01F37, "iota"},
    {0x01F38, "iota"},
    {0x01F39, "iota"},
    {0x01F3A, "iota"},
    {0x01F3B, "iota"},
    {0x01F3C, "iota"},
    {0x01F3D, "iota"},
    {0x01F3E, "iota"},
    {0x01F3F, "iota"},
    {0x01F40, "omicron"},
    {0x01F41, "omicron"},
    {0x01F42, "omicron"},
    {0x01F43, "omicron"},
    {0x01F44, "omicron"},
    {0x01F45, "omicron"},
    {0x01F48, "omicron"},
    {0x01F49, "omicron"},
    {0x01F4A, "omicron"},
    {0x01F4B, "omicron"},
    {0x01F4C, "omicron"},
    {0x01F4D, "omicron"},
    {0x01F50, "upsilon"},
    {0x01F51, "upsilon"},
    {0x01F52, "upsilon"},
    {0x01F53, "upsilon"},
    {0x01F54, "upsilon"},
    {0x01F55, "upsilon"},
    {0x01F56, "upsilon"},
    {0x01F57, "upsilon"},
    {0x01F59, "upsilon"},
    {0x01F5B, "upsilon"},
    {0x01F5D, "upsilon"},
    {0x01F5F, "upsilon"},
    {0x01F60, "omega"},
    {0x01F61, "omega"},
    {0x01F62, "omega"},
    {0x01F63, "omega"},
    {0x01F64, "omega"},
    {0x01F65, "omega"},
    {0x01F66, "omega"},
    {0x01F67, "omega"},
    {0x01F68, "omega"},
    {0x01F69, "omega"},
    {0x01F6A, "omega"},
    {0x01F6B, "omega"},
    {0x01F6C, "omega"},
    {0x01F6D, "omega"},
    {0x01F6E, "omega"},
    {0x01F6F, "omega"},
    {0x01F70, "alpha"},
    {0x01F71, "alpha"},
    {0x01F72, "epsilon"},
    {0x01F73, "epsilon"},
    {0x01F74, "eta"},
    {0x01F75, "eta"},
    {0x01F76, "iota"},
    {0x01F77, "iota"},
    {0x01F78, "omicron"},
    {0x01F79, "omicron"},
    {0x01F7A, "upsilon"},
    {0x01F7B, "upsilon"},
    {0x01F7C, "omega"},
    {0x01F7D, "omega"},
    {0x01F80, "alpha"},
    {0x01F81, "alpha"},
    {0x01F82, "alpha"},
    {0x01F83, "alpha"},
    {0x01F84, "alpha"},
    {0x01F85, "alpha"},
    {0x01F86, "alpha"},
    {0x01F87, "alpha"},
    {0x01F88, "alpha"},
    {0x01F89, "alpha"},
    {0x01F8A, "alpha"},
    {0x01F8B, "alpha"},
    {0x01F8C, "alpha"},
    {0x01F8D, "alpha"},
    {0x01F8E, "alpha"},
    {0x01F8F, "alpha"},
    {0x01F90, "eta"},
    {0x01F91, "eta"},
    {0x01F92, "eta"},
    {0x01F93, "eta"},
    {0x01F94, "eta"},
    {0x01F95, "eta"},
    {0x01F96, "eta"},
    {0x01F97, "eta"},
    {0x01F98, "eta"},
    {0x01F99, "eta"},
    {0x01F9A, "eta"},
    {0x01F9B, "eta"},
    {0x01F9C, "eta"},
    {0x01F9D, "eta"},
    {0x01F9E, "eta"},
    {0x01F9F, "eta"},
    {0x01FA0, "omega"},
    {0x01FA1, "omega"},
    {0x01FA2, "omega"},
    {0x01FA3, "omega"},
    {0x01FA4, "omega"},
    {0x01FA5, "omega"},
    {0x01FA6, "omega"},
    {0x01FA7, "omega"},
    {0x01FA8, "omega"},
    {0x01FA9, "omega"},
    {0x01FAA, "omega"},
    {0x01FAB, "omega"},
    {0x01FAC, "omega"},
    {0x01FAD, "omega"},
    {0x01FAE, "omega"},
    {0x01FAF, "omega"},
    {0x01FB0, "alpha"},
    {0x01FB1, "alpha"},
    {0x01FB2, "alpha"},
    {0x01FB3, "alpha"},
    {0x01FB4, "alpha"},
    {0x01FB6, "alpha"},
    {0x01FB7, "alpha"},
    {0x01FB8, "alpha"},
    {0x01FB9, "alpha"},
    {0x01FBA, "alpha"},
    {0x01FBB, "alpha"},
    {0x01FBC, "alpha"},
    {0x01FBD, " "},
    {0x01FBE, "iota"},
    {0x01FBF, " "},
    {0x01FC0, " "},
    {0x01FC1, " "},
    {0x01FC2, "eta"},
    {0x01FC3, "eta"},
    {0x01FC4, "eta"},
    {0x01FC6, "eta"},
    {0x01FC7, "eta"},
    {0x01FC8, "epsilon"},
    {0x01FC9, "epsilon"},
    {0x01FCA, "eta"},
    {0x01FCB, "eta"},
    {0x01FCC, "eta"},
    {0x01FCD, " "},
    {0x01FCE, " "},
    {0x01FCF, " "},
    {0x01FD0, "iota"},
    {0x01FD1, "iota"},
    {0x01FD2, "iota"},
    {0x01FD3, "iota"},
    {0x01FD6, "iota"},
    {0x01FD7, "iota"},
    {0x01FD8, "iota"},
    {0x01FD9, "iota"},
    {0x01FDA, "iota"},
    {0x01FDB, "iota"},
    {0x01FDD, " "},
    {0x01FDE, " "},
    {0x01FDF, " "},
    {0x01FE0, "upsilon"},
    {0x01FE1, "upsilon"},
    {0x01FE2, "upsilon"},
    {0x01FE3, "upsilon"},
    {0x01FE4, "rho"},
    {0x01FE5, "rho"},
    {0x01FE6, "upsilon"},
    {0x01FE7, "upsilon"},
    {0x01FE8, "upsilon"},
    {0x01FE9, "upsilon"},
    {0x01FEA, "upsilon"},
    {0x01FEB, "upsilon"},
    {0x01FEC, "rho"},
    {0x01FED, " "},
    {0x01FEE, " "},
    {0x01FEF, "`"},
    {0x01FF2, "omega"},
    {0x01FF3, "omega"},
    {0x01FF4, "omega"},
    {0x01FF6, "omega"},
    {0x01FF7, "omega"},
    {0x01FF8, "omicron"},
    {0x01FF9, "omicron"},
    {0x01FFA, "omega"},
    {0x01FFB, "omega"},
    {0x01FFC, "omega"},
    {0x01FFD, " "},
    {0x01FFE, " "},
    {0x02000, " "},
    {0x02001, " "},
    {0x02002, " "},
    {0x02003, " "},
    {0x02004, " "},
    {0x02005, " "},
    {0x02006, " "},
    {0x02007, " "},
    {0x02008, " "},
    {0x02009, " "},
    {0x0200A, " "},
    {0x02017, " "},
    {0x02024, "."},
    {0x02025, ".."},
    {0x0202F, " "},
    {0x02034, "'''"},
    {0x0203C, "!!"},
    {0x0203E, " "},
    {0x02047, "??"},
    {0x02048, "?!"},
    {0x02049, "!?"},
    {0x02057, "''''"},
    {0x0205F, " "},
    {0x02070, "0"},
    {0x02071, "i"},
    {0x02074, "4"},
    {0x02075, "5"},
    {0x02076, "6"},
    {0x02077, "7"},
    {0x02078, "8"},
    {0x02079, "9"},
    {0x0207A, "+"},
    {0x0207B, "-"},
    {0x0207C, "="},
    {0x0207D, "("},
    {0x0207E, ")"},
    {0x0207F, "n"},
    {0x02080, "0"},
    {0x02081, "1"},
    {0x02082, "2"},
    {0x02083, "3"},
    {0x02084, "4"},
    {0x02085, "5"},
    {0x02086, "6"},
    {0x02087, "7"},
    {0x02088, "8"},
    {0x02089, "9"},
    {0x0208A, "+"},
    {0x0208B, "-"},
    {0x0208C, "="},
    {0x0208D, "("},
    {0x0208E, ")"},
    {0x02090, "a"},
    {0x02091, "e"},
    {0x02092, "o"},
    {0x02093, "x"},
    {0x02095, "h"},
    {0x02096, "k"},
    {0x02097, "l"},
    {0x02098, "m"},
    {0x02099, "n"},
    {0x0209A, "p"},
    {0x0209B, "s"},
    {0x0209C, "t"},
    {0x020A8, "Rs"},
    {0x02100, "a/c"},
    {0x02101, "a/s"},
    {0x02102, "C"},
    {0x02103, " degreesC"},
    {0x02105, "c/o"},
    {0x02106, "c/u"},
    {0x02109, " degreesF"},
    {0x0210A, "g"},
    {0x0210B, "H"},
    {0x0210C, "H"},
    {0x0210D, "H"},
    {0x0210E, "h"},
    {0x02110, "I"},
    {0x02111, "I"},
    {0x02112, "L"},
    {0x02113, "l"},
    {0x02115, "N"},
    {0x02116, "No"},
    {0x02119, "P"},
    {0x0211A, "Q"},
    {0x0211B, "R"},
    {0x0211C, "R"},
    {0x0211D, "R"},
    {0x02120, "SM"},
    {0x02121, "TEL"},
    {0x02122, "TM"},
    {0x02124, "Z"},
    {0x02126, "omega"},
    {0x02128, "Z"},
    {0x0212A, "K"},
    {0x0212B, "A"},
    {0x0212C, "B"},
    {0x0212D, "C"},
    {0x0212F, "e"},
    {0x02130, "E"},
    {0x02131, "F"},
    {0x02133, "M"},
    {0x02134, "o"},
    {0x02139, "i"},
    {0x0213B, "FAX"},
    {0x0213C, "pi"},
    {0x0213D, "gamma"},
    {0x0213E, "gamma"},
    {0x0213F, "pi"},
    {0x02145, "D"},
    {0x02146, "d"},
    {0x02147, "e"},
    {0x02148, "i"},
    {0x02149, "j"},
    {0x02150, "1/7"},
    {0x02151, "1/9"},
    {0x02152, "1/10"},
    {0x02153, "1/3"},
    {0x02154, "2/3"},
    {0x02155, "1/5"},
    {0x02156, "2/5"},
    {0x02157, "3/5"},
    {0x02158, "4/5"},
    {0x02159, "1/6"},
    {0x0215A, "5/6"},
    {0x0215B, "1/8"},
    {0x0215C, "3/8"},
    {0x0215D, "5/8"},
    {0x0215E, "7/8"},
    {0x0215F, "1/"},
    {0x02160, "I"},
    {0x02161, "II"},
    {0x02162, "III"},
    {0x02163, "IV"},
    {0x02164, "V"},
    {0x02165, "VI"},
    {0x02166, "VII"},
    {0x02167, "VIII"},
    {0x02168, "IX"},
    {0x02169, "X"},
    {0x0216A, "XI"},
    {0x0216B, "XII"},
    {0x0216C, "L"},
    {0x0216D, "C"},
    {0x0216E, "D"},
    {0x0216F, "M"},
    {0x02170, "i"},
    {0x02171, "ii"},
    {0x02172, "iii"},
    {0x02173, "iv"},
    {0x02174, "v"},
    {0x02175, "vi"},
    {0x02176, "vii"},
    {0x02177, "viii"},
    {0x02178, "ix"},
    {0x02179, "x"},
    {0x0217A, "xi"},
    {0x0217B, "xii"},
    {0x0217C, "l"},
    {0x0217D, "c"},
    {0x0217E, "d"},
    {0x0217F, "m"},
    {0x02189, "0/3"},
    {0x0219A, "<-"},
    {0x0219B, "->"},
    {0x02249, "~"},
    {0x0226E, "<"},
    {0x0226F, ">"},
    {0x02270, "<="},
    {0x02271, ">="},
    {0x02460, "1"},
    {0x02461, "2"},
    {0x02462, "3"},
    {0x02463, "4"},
    {0x02464, "5"},
    {0x02465, "6"},
    {0x02466, "7"},
    {0x02467, "8"},
    {0x02468, "9"},
    {0x02469, "10"},
    {0x0246A, "11"},
    {0x0246B, "12"},
    {0x0246C, "13"},
    {0x0246D, "14"},
    {0x0246E, "15"},
    {0x0246F, "16"},
    {0x02470, "17"},
    {0x02471, "18"},
    {0x02472, "19"},
    {0x02473, "20"},
    {0x02474, "(1)"},
    {0x02475, "(2)"},
    {0x02476, "(3)"},
    {0x02477, "(4)"},
    {0x02478, "(5)"},
    {0x02479, "(6)"},
    {0x0247A, "(7)"},
    {0x0247B, "(8)"},
    {0x0247C, "(9)"},
    {0x0247D, "(10)"},
    {0x0247E, "(11)"},
    {0x0247F, "(12)"},
    {0x02480, "(13)"},
    {0x02481, "(14)"},
    {0x02482, "(15)"},
    {0x02483, "(16)"},
    {0x02484, "(17)"},
    {0x02485, "(18)"},
    {0x02486, "(19)"},
    {0x02487, "(20)"},
    {0x02488, "1."},
    {0x02489, "2."},
    {0x0248A, "3."},
    {0x0248B, "4."},
    {0x0248C, "5."},
    {0x0248D, "6."},
    {0x0248E, "7."},
    {0x0248F, "8."},
    {0x02490, "9."},
    {0x02491, "10."},
    {0x02492, "11."},
    {0x02493, "12."},
    {0x02494, "13."},
    {0x02495, "14."},
    {0x02496, "15."},
    {0x02497, "16."},
    {0x02498, "17."},
    {0x02499, "18."},
    {0x0249A, "19."},
    {0x0249B, "20."},
    {0x0249C, "(a)"},
    {0x0249D, "(b)"},
    {0x0249E, "(c)"},
    {0x0249F, "(d)"},
    {0x024A0, "(e)"},
    {0x024A1, "(f)"},
    {0x024A2, "(g)"},
    {0x024A3, "(h)"},
    {0x024A4, "(i)"},
    {0x024A5, "(j)"},
    {0x024A6, "(k)"},
    {0x024A7, "(l)"},
    {0x024A8, "(m)"},
    {0x024A9, "(n)"},
    {0x024AA, "(o)"},
    {0x024AB, "(p)"},
    {0x024AC, "(q)"},
    {0x024AD, "(r)"},
    {0x024AE, "(s)"},
    {0x024AF, "(t)"},
    {0x024B0, "(u)"},
    {0x024B1, "(v)"},
    {0x024B2, "(w)"},
    {0x024B3, "(x)"},
    {0x024B4, "(y)"},
    {0x024B5, "(z)"},
    {0x024B6, "A"},
    {0x024B7, "B"},
    {0x024B8, "C"},
    {0x024B9, "D"},
    {0x024BA, "E"},
    {0x024BB, "F"},
    {0x024BC, "G"},
    {0x024BD, "H"},
    {0x024BE, "I"},
    {0x024BF, "J"},
    {0x024C0, "K"},
    {0x024C1, "L"},
    {0x024C2, "M"},
    {0x024C3, "N"},
    {0x024C4, "O"},
    {0x024C5, "P"},
    {0x024C6, "Q"},
    {0x024C7, "R"},
    {0x024C8, "S"},
    {0x024C9, "T"},
    {0x024CA, "U"},
    {0x024CB, "V"},
    {0x024CC, "W"},
    {0x024CD, "X"},
    {0x024CE, "Y"},
    {0x024CF, "Z"},
    {0x024D0, "a"},
    {0x024D1, "b"},
    {0x024D2, "c"},
    {0x024D3, "d"},
    {0x024D4, "e"},
    {0x024D5, "f"},
    {0x024D6, "g"},
    {0x024D7, "h"},
    {0x024D8, "i"},
    {0x024D9, "j"},
    {0x024DA, "k"},
    {0x024DB, "l"},
    {0x024DC, "m"},
    {0x024DD, "n"},
    {0x024DE, "o"},
    {0x024DF, "p"},
    {0x024E0, "q"},
    {0x024E1, "r"},
    {0x024E2, "s"},
    {0x024E3, "t"},
    {0x024E4, "u"},
    {0x024E5, "v"},
    {0x024E6, "w"},
    {0x024E7, "x"},
    {0x024E8, "y"},
    {0x024E9, "z"},
    {0x024EA, "0"},
    {0x02A74, "::="},
    {0x02A75, "=="},
    {0x02A76, "==="},
    {0x02C7C, "j"},
    {0x02C7D, "V"},
    {0x03000, " "},
    {0x0309B, " "},
    {0x0309C, " "},
    {0x03250, "PTE"},
    {0x03251, "21"},
    {0x03252, "22"},
    {0x03253, "23"},
    {0x03254, "24"},
    {0x03255, "25"},
    {0x03256, "26"},
    {0x03257, "27"},
    {0x03258, "28"},
    {0x03259, "29"},
    {0x0325A, "30"},
    {0x0325B, "31"},
    {0x0325C, "32"},
    {0x0325D, "33"},
    {0x0325E, "34"},
    {0x0325F, "35"},
    {0x032B1, "36"},
    {0x032B2, "37"},
    {0x032B3, "38"},
    {0x032B4, "39"},
    {0x032B5, "40"},
    {0x032B6, "41"},
    {0x032B7, "42"},
    {0x032B8, "43"},
    {0x032B9, "44"},
    {0x032BA, "45"},
    {0x032BB, "46"},
    {0x032BC, "47"},
    {0x032BD, "48"},
    {0x032BE, "49"},
    {0x032BF, "50"},
    {0x032CC, "Hg"},
    {0x032CD, "erg"},
    {0x032CE, "eV"},
    {0x032CF, "LTD"},
    {0x03371, "hPa"},
    {0x03372, "da"},
    {0x03373, "AU"},
    {0x03374, "bar"},
    {0x03375, "oV"},
    {0x03376, "pc"},
    {0x03377, "dm"},
    {0x03378, "dm2"},
    {0x03379, "dm3"},
    {0x0337A, "IU"},
    {0x03380, "pA"},
    {0x03381, "nA"},
    {0x03382, "muA"},
    {0x03383, "mA"},
    {0x03384, "kA"},
    {0x03385, "KB"},
    {0x03386, "MB"},
    {0x03387, "GB"},
    {0x03388, "cal"},
    {0x03389, "kcal"},
    {0x0338A, "pF"},
    {0x0338B, "nF"},
    {0x0338C, "muF"},
    {0x0338D, "mug"},
    {0x0338E, "mg"},
    {0x0338F, "kg"},
    {0x03390, "Hz"},
    {0x03391, "kHz"},
    {0x03392, "MHz"},
    {0x03393, "GHz"},
    {0x03394, "THz"},
    {0x03395, "mul"},
    {0x03396, "ml"},
    {0x03397, "dl"},
    {0x03398, "kl"},
    {0x03399, "fm"},
    {0x0339A, "nm"},
    {0x0339B, "mum"},
    {0x0339C, "mm"},
    {0x0339D, "cm"},
    {0x0339E, "km"},
    {0x0339F, "mm2"},
    {0x033A0, "cm2"},
    {0x033A1, "m2"},
    {0x033A2, "km2"},
    {0x033A3, "mm3"},
    {0x033A4, "cm3"},
    {0x033A5, "m3"},
    {0x033A6, "km3"},
    {0x033A9, "Pa"},
    {0x033AA, "kPa"},
    {0x033AB, "MPa"},
    {0x033AC, "GPa"},
    {0x033AD, "rad"},
    {0x033B0, "ps"},
    {0x033B1, "ns"},
    {0x033B2, "mus"},
    {0x033B3, "ms"},
    {0x033B4, "pV"},
    {0x033B5, "nV"},
    {0x033B6, "muV"},
    {0x033B7, "mV"},
    {0x033B8, "kV"},
    {0x033B9, "MV"},
    {0x033BA, "pW"},
    {0x033BB, "nW"},
    {0x033BC, "muW"},
    {0x033BD, "mW"},
    {0x033BE, "kW"},
    {0x033BF, "MW"},
    {0x033C0, "komega"},
    {0x033C1, "Momega"},
    {0x033C2, "a.m."},
    {0x033C3, "Bq"},
    {0x033C4, "cc"},
    {0x033C5, "cd"},
    {0x033C7, "Co."},
    {0x033C8, "dB"},
    {0x033C9, "Gy"},
    {0x033CA, "ha"},
    {0x033CB, "HP"},
    {0x033CC, "in"},
    {0x033CD, "KK"},
    {0x033CE, "KM"},
    {0x033CF, "kt"},
    {0x033D0, "lm"},
    {0x033D1, "ln"},
    {0x033D2, "log"},
    {0x033D3, "lx"},
    {0x033D4, "mb"},
    {0x033D5, "mil"},
    {0x033D6, "mol"},
    {0x033D7, "PH"},
    {0x033D8, "p.m."},
    {0x033D9, "PPM"},
    {0x033DA, "PR"},
    {0x033DB, "sr"},
    {0x033DC, "Sv"},
    {0x033DD, "Wb"},
    {0x033FF, "gal"},
    {0x0FB00, "ff"},
    {0x0FB01, "fi"},
    {0x0FB02, "fl"},
    {0x0FB03, "ffi"},
    {0x0FB04, "ffl"},
    {0x0FB05, "st"},
    {0x0FB06, "st"},
    {0x0FB29, "+"},
    {0x0FC5E, " "},
    {0x0FC5F, " "},
    {0x0FC60, " "},
    {0x0FC61, " "},
    {0x0FC62, " "},
    {0x0FC63, " "},
    {0x0FE10, ","},
    {0x0FE13, ":"},
    {0x0FE14, ";"},
    {0x0FE15, "!"},
    {0x0FE16, "?"},
    {0x0FE19, "..."},
    {0x0FE30, ".."},
    {0x0FE31, "-"},
    {0x0FE32, "-"},
    {0x0FE33, "_"},
    {0x0FE34, "_"},
    {0x0FE35, "("},
    {0x0FE36, ")"},
    {0x0FE37, "{"},
    {0x0FE38, "}"},
    {0x0FE47, "["},
    {0x0FE48, "]"},
    {0x0FE49, " "},
    {0x0FE4A, " "},
    {0x0FE4B, " "},
    {0x0FE4C, " "},
    {0x0FE4D, "_"},
    {0x0FE4E, "_"},
    {0x0FE4F, "_"},
    {0x0FE50, ","},
    {0x0FE52, "."},
    {0x0FE54, ";"},
    {0x0FE55, ":"},
    {0x0FE56, "?"},
    {0x0FE57, "!"},
    {0x0FE58, "-"},
    {0x0FE59, "("},
    {0x0FE5A, ")"},
    {0x0FE5B, "{"},
    {0x0FE5C, "}"},
    {0x0FE5F, "#"},
    {0x0FE60, "&"},
    {0x0FE61, "*"},
    {0x0FE62, "+"},
    {0x0FE63, "-"},
    {0x0FE64, "<"},
    {0x0FE65, ">"},
    {0x0FE66, "="},
    {0x0FE68, "\\"},
    {0x0FE69, "$"},
    {0x0FE6A, "%"},
    {0x0FE6B, "@"},
    {0x0FE70, " "},
    {0x0FE72, " "},
    {0x0FE74, " "},
    {0x0FE76, " "},
    {0x0FE78, " "},
    {0x0FE7A, " "},
    {0x0FE7C, " "},
    {0x0FE7E, " "},
    {0x0FF01, "!"},
    {0x0FF02, "\""},
    {0x0FF03, "#"},
    {0x0FF04, "$"},
    {0x0FF05, "%"},
    {0x0FF06, "&"},
    {0x0FF07, "'"},
    {0x0FF08, "("},
    {0x0FF09, ")"},
    {0x0FF0A, "*"},
    {0x0FF0B, "+"},
    {0x0FF0C, ","},
    {0x0FF0D, "-"},
    {0x0FF0E, "."},
    {0x0FF0F, "/"},
    {0x0FF10, "0"},
    {0x0FF11, "1"},
    {0x0FF12, "2"},
    {0x0FF13, "3"},
    {0x0FF14, "4"},
    {0x0FF15, "5"},
    {0x0FF16, "6"},
    {0x0FF17, "7"},
    {0x0FF18, "8"},
    {0x0FF19, "9"},
    {0x0FF1A, ":"},
    {0x0FF1B, ";"},
    {0x0FF1C, "<"},
    {0x0FF1D, "="},
    {0x0FF1E, ">"},
    {0x0FF1F, "?"},
    {0x0FF20, "@"},
    {0x0FF21, "A"},
    {0x0FF22, "B"},
    {0x0FF23, "C"},
    {0x0FF24, "D"},
    {0x0FF25, "E"},
    {0x0FF26, "F"},
    {0x0FF27, "G"},
    {0x0FF28, "H"},
    {0x0FF29, "I"},
    {0x0FF2A, "J"},
    {0x0FF2B, "K"},
    {0x0FF2C, "L"},
    {0x0FF2D, "M"},
    {0x0FF2E, "N"},
    {0x0FF2F, "O"},
    {0x0FF30, "P"},
    {0x0FF31, "Q"},
    {0x0FF32, "R"},
    {0x0FF33, "S"},
    {0x0FF34, "T"},
    {0x0FF35, "U"},
    {0x0FF36, "V"},
    {0x0FF37, "W"},
    {0x0FF38, "X"},
    {0x0FF39, "Y"},
    {0x0FF3A, "Z"},
    {0x0FF3B, "["},
    {0x0FF3C, "\\"},
    {0x0FF3D, "]"},
    {0x0FF3E, "^"},
    {0x0FF3F, "_"},
    {0x0FF40, "`"},
    {0x0FF41, "a"},
    {0x0FF42, "b"},
    {0x0FF43, "c"},
    {0x0FF44, "d"},
    {0x0FF45, "e"},
    {0x0FF46, "f"},
    {0x0FF47, "g"},
    {0x0FF48, "h"},
    {0x0FF49, "i"},
    {0x0FF4A, "j"},
    {0x0FF4B, "k"},
    {0x0FF4C, "l"},
    {0x0FF4D, "m"},
    {0x0FF4E, "n"},
    {0x0FF4F, "o"},
    {0x0FF50, "p"},
    {0x0FF51, "q"},
    {0x0FF52, "r"},
    {0x0FF53, "s"},
    {0x0FF54, "t"},
    {0x0FF55, "u"},
    {0x0FF56, "v"},
    {0x0FF57, "w"},
    {0x0FF58, "x"},
    {0x0FF59, "y"},
    {0x0FF5A, "z"},
    {0x0FF5B, "{"},
    {0x0FF5C, "|"},
    {0x0FF5D, "}"},
    {0x0FF5E, "~"},
    {0x0FFE3, " "},
    {0x0FFE9, "<-"},
    {0x0FFEB, "->"},
    {0x1D400, "A"},
    {0x1D401, "B"},
    {0x1D402, "C"},
    {0x1D403, "D"},
    {0x1D404, "E"},
    {0x1D405, "F"},
    {0x1D406, "G"},
    {0x1D407, "H"},
    {0x1D408, "I"},
    {0x1D409, "J"},
    {0x1D40A, "K"},
    {0x1D40B, "L"},
    {0x1D40C, "M"},
    {0x1D40D, "N"},
    {0x1D40E, "O"},
    {0x1D40F, "P"},
    {0x1D410, "Q"},
    {0x1D411, "R"},
    {0x1D412, "S"},
    {0x1D413, "T"},
    {0x1D414, "U"},
    {0x1D415, "V"},
    {0x1D416, "W"},
    {0x1D417, "X"},
    {0x1D418, "Y"},
    {0x1D419, "Z"},
    {0x1D41A, "a"},
    {0x1D41B, "b"},
    {0x1D41C, "c"},
    {0x1D41D, "d"},
    {0x1D41E, "e"},
    {0x1D41F, "f"},
    {0x1D420, "g"},
    {0x1D421, "h"},
    {0x1D422, "i"},
    {0x1D423, "j"},
    {0x1D424, "k"},
    {0x1D425, "l"},
    {0x1D426, "m"},
    {0x1D427, "n"},
    {0x1D428, "o"},
    {0x1D429, "p"},
    {0x1D42A, "q"},
    {0x1D42B, "r"},
    {0x1D42C, "s"},
    {0x1D42D, "t"},
    {0x1D42E, "u"},
    {0x1D42F, "v"},
    {0x1D430, "w"},
    {0x1D431, "x"},
    {0x1D432, "y"},
    {0x1D433, "z"},
    {0x1D434, "A"},
    {0x1D435, "B"},
    {0x1D436, "C"},
    {0x1D437, "D"},
    {0x1D438, "E"},
    {0x1D439, "F"},
    {0x1D43A, "G"},
    {0x1D43B, "H"},
    {0x1D43C, "I"},
    {0x1D43D, "J"},
    {0x1D43E, "K"},
    {0x1D43F, "L"},
    {0x1D440, "M"},
    {0x1D441, "N"},
    {0x1D442, "O"},
    {0x1D443, "P"},
    {0x1D444, "Q"},
    {0x1D445, "R"},
    {0x1D446, "S"},
    {0x1D447, "T"},
    {0x1D448, "U"},
    {0x1D449, "V"},
    {0x1D44A, "W"},
    {0x1D44B, "X"},
    {0x1D44C, "Y"},
    {0x1D44D, "Z"},
    {0x1D44E, "a"},
    {0x1D44F, "b"},
    {0x1D450, "c"},
    {0x1D451, "d"},
    {0x1D452, "e"},
    {0x1D453, "f"},
    {0x1D454, "g"},
    {0x1D456, "i"},
    {0x1D457, "j"},
    {0x1D458, "k"},
    {0x1D459, "l"},
    {0x1D45A, "m"},
    {0x1D45B, "n"},
    {0x1D45C, "o"},
    {0x1D45D, "p"},
    {0x1D45E, "q"},
    {0x1D45F, "r"},
    {0x1D460, "s"},
    {0x1D461, "t"},
    {0x1D462, "u"},
    {0x1D463, "v"},
    {0x1D464, "w"},
    {0x1D465, "x"},
    {0x1D466, "y"},
    {0x1D467, "z"},
    {0x1D468, "A"},
    {0x1D469, "B"},
    {0x1D46A, "C"},
    {0x1D46B, "D"},
    {0x1D46C, "E"},
    {0x1D46D, "F"},
    {0x1D46E, "G"},
    {0x1D46F, "H"},
    {0x1D470, "I"},
    {0x1D471, "J"},
    {0x1D472, "K"},
    {0x1D473, "L"},
    {0x1D474, "M"},
    {0x1D475, "N"},
    {0x1D476, "O"},
    {0x1D477, "P"},
    {0x1D478, "Q"},
    {0x1D479, "R"},
    {0x1D47A, "S"},
    {0x1D47B, "T"},
    {0x1D47C, "U"},
    {0x1D47D, "V"},
    {0x1D47E, "W"},
    {0x1D47F, "X"},
    {0x1D480, "Y"},
    {0x1D481, "Z"},
    {0x1D482, "a"},
    {0x1D483, "b"},
    {0x1D484, "c"},
    {0x1D485, "d"},
    {0x1D486, "e"},
    {0x1D487, "f"},
    {0x1D488, "g"},
    {0x1D489, "h"},
    {0x1D48A, "i"},
    {0x1D48B, "j"},
    {0x1D48C, "k"},
    {0x1D48D, "l"},
    {0x1D48E, "m"},
    {0x1D48F, "n"},
    {0x1D490, "o"},
    {0x1D491, "p"},
    {0x1D492, "q"},
    {0x1D493, "r"},
    {0x1D494, "s"},
    {0x1D495, "t"},
    {0x1D496, "u"},
    {0x1D497, "v"},
    {0x1D498, "w"},
    {0x1D499, "x"},
    {0x1D49A, "y"},
    {0x1D49B, "z"},
    {0x1D49C, "A"},
    {0x1D49E, "C"},
    {0x1D49F, "D"},
    {0x1D4A2, "G"},
    {0x1D4A5, "J"},
    {0x1D4A6, "K"},
    {0x1D4A9, "N"},
    {0x1D4AA, "O"},
    {0x1D4AB, "P"},
    {0x1D4AC, "Q"},
    {0x1D4AE, "S"},
    {0x1D4AF, "T"},
    {0x1D4B0, "U"},
    {0x1D4B1, "V"},
    {0x1D4B2, "W"},
    {0x1D4B3, "X"},
    {0x1D4B4, "Y"},
    {0x1D4B5, "Z"},
    {0x1D4B6, "a"},
    {0x1D4B7, "b"},
    {0x1D4B8, "c"},
    {0x1D4B9, "d"},
    {0x1D4BB, "f"},
    {0x1D4BD, "h"},
    {0x1D4BE, "i"},
    {0x1D4BF, "j"},
    {0x1D4C0, "k"},
    {0x1D4C1, "l"},
    {0x1D4C2, "m"},
    {0x1D4C3, "n"},
    {0x1D4C5, "p"},
    {0x1D4C6, "q"},
    {0x1D4C7, "r"},
    {0x1D4C8, "s"},
    {0x1D4C9, "t"},
    {0x1D4CA, "u"},
    {0x1D4CB, "v"},
    {0x1D4CC, "w"},
    {0x1D4CD, "x"},
    {0x1D4CE, "y"},
    {0x1D4CF, "z"},
    {0x1D4D0, "A"},
    {0x1D4D1, "B"},
    {0x1D4D2, "C"},
    {0x1D4D3, "D"},
    {0x1D4D4, "E"},
    {0x1D4D5, "F"},
    {0x1D4D6, "G"},
    {0x1D4D7, "H"},
    {0x1D4D8, "I"},
    {0x1D4D9, "J"},
    {0x1D4DA, "K"},
    {0x1D4DB, "L"},
    {0x1D4DC, "M"},
    {0x1D4DD, "N"},
    {0x1D4DE, "O"},
    {0x1D4DF, "P"},
    {0x1D4E0, "Q"},
    {0x1D4E1, "R"},
    {0x1D4E2, "S"},
    {0x1D4E3, "T"},
    {0x1D4E4, "U"},
    {0x1D4E5, "V"},
    {0x1D4E6, "W"},
    {0x1D4E7, "X"},
    {0x1D4E8, "Y"},
    {0x1D4E9, "Z"},
    {0x1D4EA, "a"},
    {0x1D4EB, "b"},
    {0x1D4EC, "c"},
    {0x1D4ED, "d"},
    {0x1D4EE, "e"},
    {0x1D4EF, "f"},
    {0x1D4F0, "g"},
    {0x1D4F1, "h"},
    {0x1D4F2, "i"},
    {0x1D4F3, "j"},
    {0x1D4F4, "k"},
    {0x1D4F5, "l"},
    {0x1D4F6, "m"},
    {0x1D4F7, "n"},
    {0x1D4F8, "o"},
    {0x1D4F9, "p"},
    {0x1D4FA, "q"},
    {0x1D4FB, "r"},
    {0x1D4FC, "s"},
    {0x1D4FD, "t"},
    {0x1D4FE, "u"},
    {0x1D4FF, "v"},
    {0x1D500, "w"},
    {0x1D501, "x"},
    {0x1D502, "y"},
    {0x1D503, "z"},
    {0x1D504, "A"},
    {0x1D505, "B"},
    {0x1D507, "D"},
    {0x1D508, "E"},
    {0x1D509, "F"},
    {0x1D50A, "G"},
    {0x1D50D, "J"},
    {0x1D50E, "K"},
    {0x1D50F, "L"},
    {0x1D510, "M"},
    {0x1D511, "N"},
    {0x1D512, "O"},
    {0x1D513, "P"},
    {0x1D514, "Q"},
    {0x1D516, "S"},
    {0x1D517, "T"},
    {0x1D518, "U"},
    {0x1D519, "V"},
    {0x1D51A, "W"},
    {0x1D51B, "X"},
    {0x1D51C, "Y"},
    {0x1D51E, "a"},
    {0x1D51F, "b"},
    {0x1D520, "c"},
    {0x1D521, "d"},
    {0x1D522, "e"},
    {0x1D523, "f"},
    {0x1D524, "g"},
    {0x1D525, "h"},
    {0x1D526, "i"},
    {0x1D527, "j"},
    {0x1D528, "k"},
    {0x1D529, "l"},
    {0x1D52A, "m"},
    {0x1D52B, "n"},
    {0x1D52C, "o"},
    {0x1D52D, "p"},
    {0x1D52E, "q"},
    {0x1D52F, "r"},
    {0x1D530, "s"},
    {0x1D531, "t"},
    {0x1D532, "u"},
    {0x1D533, "v"},
    {0x1D534, "w"},
    {0x1D535, "x"},
    {0x1D536, "y"},
    {0x1D537, "z"},
    {0x1D538, "A"},
    {0x1D539, "B"},
    {0x1D53B, "D"},
    {0x1D53C, "E"},
    {0x1D53D, "F"},
    {0x1D53E, "G"},
    {0x1D540, "I"},
    {0x1D541, "J"},
    {0x1D542, "K"},
    {0x1D543, "L"},
    {0x1D544, "M"},
    {0x1D546, "O"},
    {0x1D54A, "S"},
    {0x1D54B, "T"},
    {0x1D54C, "U"},
    {0x1D54D, "V"},
    {0x1D54E, "W"},
    {0x1D54F, "X"},
    {0x1D550, "Y"},
    {0x1D552, "a"},
    {0x1D553, "b"},
    {0x1D554, "c"},
    {0x1D555, "d"},
    {0x1D556, "e"},
    {0x1D557, "f"},
    {0x1D558, "g"},
    {0x1D559, "h"},
    {0x1D55A, "i"},
    {0x1D55B, "j"},
    {0x1D55C, "k"},
    {0x1D55D, "l"},
    {0x1D55E, "m"},
    {0x1D55F, "n"},
    {0x1D560, "o"},
    {0x1D561, "p"},
    {0x1D562, "q"},
    {0x1D563, "r"},
    {0x1D564, "s"},
    {0x1D565, "t"},
    {0x1D566, "u"},
    {0x1D567, "v"},
    {0x1D568, "w"},
    {0x1D569, "x"},
    {0x1D56A, "y"},
    {0x1D56B, "z"},
    {0x1D56C, "A"},
    {0x1D56D, "B"},
    {0x1D56E, "C"},
    {0x1D56F, "D"},
    {0x1D570, "E"},
    {0x1D571, "F"},
    {0x1D572, "G"},
    {0x1D573, "H"},
    {0x1D574, "I"},
    {0x1D575, "J"},
    {0x1D576, "K"},
    {0x1D577, "L"},
    {0x1D578, "M"},
    {0x1D579, "N"},
    {0x1D57A, "O"},
    {0x1D57B, "P"},
    {0x1D57C, "Q"},
    {0x1D57D, "R"},
    {0x1D57E, "S"},
    {0x1D57F, "T"},
    {0x1D580, "U"},
    {0x1D581, "V"},
    {0x1D582, "W"},
    {0x1D583, "X"},
    {0x1D584, "Y"},
    {0x1D585, "Z"},
    {0x1D586, "a"},
    {0x1D587, "b"},
    {0x1D588, "c"},
    {0x1D589, "d"},
    {0x1D58A, "e"},
    {0x1D58B, "f"},
    {0x1D58C, "g"},
    {0x1D58D, "h"},
    {0x1D58E, "i"},
    {0x1D58F, "j"},
    {0x1D590, "k"},
    {0x1D591, "l"},
    {0x1D592, "m"},
    {0x1D593, "n"},
    {0x1D594, "o"},
    {0x1D595, "p"},
    {0x1D596, "q"},
    {0x1D597, "r"},
    {0x1D598, "s"},
    {0x1D599, "t"},
    {0x1D59A, "u"},
    {0x1D59B, "v"},
    {0x1D59C, "w"},
    {0x1D59D, "x"},
    {0x1D59E, "y"},
    {0x1D59F, "z"},
    {0x1D5A0, "A"},
    {0x1D5A1, "B"},
    {0x1D5A2, "C"},
    {0x1D5A3, "D"},
    {0x1D5A4, "E"},
    {0x1D5A5, "F"},
    {0x1D5A6, "G"},
    {0x1D5A7, "H"},
    {0x1D5A8, "I"},
    {0x1D5A9, "J"},
    {0x1D5AA, "K"},
    {0x1D5AB, "L"},
    {0x1D5AC, "M"},
    {0x1D5AD, "N"},
    {0x1D5AE, "O"},
    {0x1D5AF, "P"},
    {0x1D5B0, "Q"},
    {0x1D5B1, "R"},
    {0x1D5B2, "S"},
    {0x1D5B3, "T"},
    {0x1D5B4, "U"},
    {0x1D5B5, "V"},
    {0x1D5B6, "W"},
    {0x1D5B7, "X"},
    {0x1D5B8, "Y"},
    {0x1D5B9, "Z"},
    {0x1D5BA, "a"},
    {0x1D5BB, "b"},
    {0x1D5BC, "c"},
    {0x1D5BD, "d"},
    {0x1D5BE, "e"},
    {0x1D5BF, "f"},
    {0x1D5C0, "g"},
    {0x1D5C1, "h"},
    {0x1D5C2, "i"},
    {0x1D5C3, "j"},
    {0x1D5C4, "k"},
    {0x1D5C5, "l"},
    {0x1D5C6, "m"},
    {0x1D5C7, "n"},
    {0x1D5C8, "o"},
    {0x1D5C9, "p"},
    {0x1D5CA, "q"},
    {0x1D5CB, "r"},
    {0x1D5CC, "s"},
    {0x1D5CD, "t"},
    {0x1D5CE, "u"},
    {0x1D5CF, "v"},
    {0x1D5D0, "w"},
    {0x1D5D1, "x"},
    {0x1D5D2, "y"},
    {0x1D5D3, "z"},
    {0x1D5D4, "A"},
    {0x1D5D5, "B"},
    {0x1D5D6, "C"},
    {0x1D5D7, "D"},
    {0x1D5D8, "E"},
    {0x1D5D9, "F"},
    {0x1D5DA, "G"},
    {0x1D5DB, "H"},
    {0x1D5DC, "I"},
    {0x1D5DD, "J"},
    {0x1D5DE, "K"},
    {0x1D5DF, "L"},
    {0x1D5E0, "M"},
    {0x1D5E1, "N"},
    {0x1D5E2, "O"},
    {0x1D5E3, "P"},
    {0x1D5E4, "Q"},
    {0x1D5E5, "R"},
    {0x1D5E6, "S"},
    {0x1D5E7, "T"},
    {0x1D5E8, "U"},
    {0x1D5E9, "V"},
    {0x1D5EA, "W"},
    {0x1D5EB, "X"},
    {0x1D5EC, "Y"},
    {0x1D5ED, "Z"},
    {0x1D5EE, "a"},
    {0x1D5EF, "b"},
    {0x1D5F0, "c"},
    {0x1D5F1, "d"},
    {0x1D5F2, "e"},
    {0x1D5F3, "f"},
    {0x1D5F4, "g"},
    {0x1D5F5, "h"},
    {0x1D5F6, "i"},
    {0x1D5F7, "j"},
    {0x1D5F8, "k"},
    {0x1D5F9, "l"},
    {0x1D5FA, "m"},
    {0x1D5FB, "n"},
    {0x1D5FC, "o"},
    {0x1D5FD, "p"},
    {0x1D5FE, "q"},
    {0x1D5FF, "r"},
    {0x1D600, "s"},
    {0x1D601, "t"},
    {0x1D602, "u"},
    {0x1D603, "v"},
    {0x1D604, "w"},
    {0x1D605, "x"},
    {0x1D606, "y"},
    {0x1D607, "z"},
    {0x1D608, "A"},
    {0x1D609, "B"},
    {0x1D60A, "C"},
    {0x1D60B, "D"},
    {0x1D60C, "E"},
    {0x1D60D, "F"},
    {0x1D60E, "G"},
    {0x1D60F, "H"},
    {0x1D610, "I"},
    {0x1D611, "J"},
    {0x1D612, "K"},
    {0x1D613, "L"},
    {0x1D614, "M"},
    {0x1D615, "N"},
    {0x1D616, "O"},
    {0x1D617, "P"},
    {0x1D618, "Q"},
    {0x1D619, "R"},
    {0x1D61A, "S"},
    {0x1D61B, "T"},
    {0x1D61C, "U"},
    {0x1D61D, "V"},
    {0x1D61E, "W"},
    {0x1D61F, "X"},
    {0x1D620, "Y"},
    {0x1D621, "Z"},
    {0x1D622, "a"},
    {0x1D623, "b"},
    {0x1D624, "c"},
    {0x1D625, "d"},
    {0x1D626, "e"},
    {0x1D627, "f"},
    {0x1D628, "g"},
    {0x1D629, "h"},
    {0x1D62A, "i"},
    {0x1D62B, "j"},
    {0x1D62C, "k"},
    {0x1D62D, "l"},
    {0x1D62E, "m"},
    {0x1D62F, "n"},
    {0x1D630, "o"},
    {0x1D631, "p"},
    {0x1D632, "q"},
    {0x1D633, "r"},
    {0x1D634, "s"},
    {0x1D635, "t"},
    {0x1D636, "u"},
    {0x1D637, "v"},
    {0x1D638, "w"},
    {0x1D639, "x"},
    {0x1D63A, "y"},
    {0x1D63B, "z"},
    {0x1D63C, "A"},
    {0x1D63D, "B"},
    {0x1D63E, "C"},
    {0x1D63F, "D"},
    {0x1D640, "E"},
    {0x1D641, "F"},
    {0x1D642, "G"},
    {0x1D643, "H"},
    {0x1D644, "I"},
    {0x1D645, "J"},
    {0x1D646, "K"},
    {0x1D647, "L"},
    {0x1D648, "M"},
    {0x1D649, "N"},
    {0x1D64A, "O"},
    {0x1D64B, "P"},
    {0x1D64C, "Q"},
    {0x1D64D, "R"},
    {0x1D64E, "S"},
    {0x1D64F, "T"},
    {0x1D650, "U"},
    {0x1D651, "V"},
    {0x1D652, "W"},
    {0x1D653, "X"},
    {0x1D654, "Y"},
    {0x1D655, "Z"},
    {0x1D656, "a"},
    {0x1D657, "b"},
    {0x1D658, "c"},
    {0x1D659, "d"},
    {0x1D65A, "e"},
    {0x1D65B, "f"},
    {0x1D65C, "g"},
    {0x1D65D, "h"},
    {0x1D65E, "i"},
    {0x1D65F, "j"},
    {0x1D660, "k"},
    {0x1D661, "l"},
    {0x1D662, "m"},
    {0x1D663, "n"},
    {0x1D664, "o"},
    {0x1D665, "p"},
    {0x1D666, "q"},
    {0x1D667, "r"},
    {0x1D668, "s"},
    {0x1D669, "t"},
    {0x1D66A, "u"},
    {0x1D66B, "v"},
    {0x1D66C, "w"},
    {0x1D66D, "x"},
    {0x1D66E, "y"},
    {0x1D66F, "z"},
    {0x1D670, "A"},
    {0x1D671, "B"},
    {0x1D672, "C"},
    {0x1D673, "D"},
    {0x1D674, "E"},
    {0x1D675, "F"},
    {0x1D676, "G"},
    {0x1D677, "H"},
    {0x1D678, "I"},
    {0x1D679, "J"},
    {0x1D67A, "K"},
    {0x1D67B, "L"},
    {0x1D67C, "M"},
    {0x1D67D, "N"},
    {0x1D67E, "O"},
    {0x1D67F, "P"},
    {0x1D680, "Q"},
    {0x1D681, "R"},
    {0x1D682, "S"},
    {0x1D683, "T"},
    {0x1D684, "U"},
    {0x1D685, "V"},
    {0x1D686, "W"},
    {0x1D687, "X"},
    {0x1D688, "Y"},
    {0x1D689, "Z"},
    {0x1D68A, "a"},
    {0x1D68B, "b"},
    {0x1D68C, "c"},
    {0x1D68D, "d"},
    {0x1D68E, "e"},
    {0x1D68F, "f"},
    {0x1D690, "g"},
    {0x1D691, "h"},
    {0x1D692, "i"},
    {0x1D693, "j"},
    {0x1D694, "k"},
    {0x1D695, "l"},
    {0x1D696, "m"},
    {0x1D697, "n"},
    {0x1D698, "o"},
    {0x1D699, "p"},
    {0x1D69A, "q"},
    {0x1D69B, "r"},
    {0x1D69C, "s"},
    {0x1D69D, "t"},
    {0x1D69E, "u"},
    {0x1D69F, "v"},
    {0x1D6A0, "w"},
    {0x1D6A1, "x"},
    {0x1D6A2, "y"},
    {0x1D6A3, "z"},
    {0x1D6A8, "alpha"},
    {0x1D6A9, "beta"},
    {0x1D6AA, "gamma"},
    {0x1D6AB, "delta"},
    {0x1D6AC, "epsilon"},
    {0x1D6AD, "zeta"},
    {0x1D6AE, "eta"},
    {0x1D6AF, "theta"},
    {0x1D6B0, "iota"},
    {0x1D6B1, "kappa"},
    {0x1D6B2, "lambda"},
    {0x1D6B3, "mu"},
    {0x1D6B4, "nu"},
    {0x1D6B5, "xi"},
    {0x1D6B6, "omicron"},
    {0x1D6B7, "pi"},
    {0x1D6B8, "rho"},
    {0x1D6B9, "theta"},
    {0x1D6BA, "sigma"},
    {0x1D6BB, "tau"},
    {0x1D6BC, "upsilon"},
    {0x1D6BD, "phi"},
    {0x1D6BE, "chi"},
    {0x1D6BF, "psi"},
    {0x1D6C0, "omega"},
    {0x1D6C2, "alpha"},
    {0x1D6C3, "beta"},
    {0x1D6C4, "gamma"},
    {0x1D6C5, "delta"},
    {0x1D6C6, "epsilon"},
    {0x1D6C7, "zeta"},
    {0x1D6C8, "eta"},
    {0x1D6C9, "theta"},
    {0x1D6CA, "iota"},
    {0x1D6CB, "kappa"},
    {0x1D6CC, "lambda"},
    {0x1D6CD, "mu"},
    {0x1D6CE, "nu"},
    {0x1D6CF, "xi"},
    {0x1D6D0, "omicron"},
    {0x1D6D1, "pi"},
    {0x1D6D2, "rho"},
    {0x1D6D3, "sigma"},
    {0x1D6D4, "sigma"},
    {0x1D6D5, "tau"},
    {0x1D6D6, "upsilon"},
    {0x1D6D7, "phi"},
    {0x1D6D8, "chi"},
    {0x1D6D9, "psi"},
    {0x1D6DA, "omega"},
    {0x1D6DC, "epsilon"},
    {0x1D6DD, "theta"},
    {0x1D6DE, "kappa"},
    {0x1D6DF, "phi"},
    {0x1D6E0, "rho"},
    {0x1D6E1, "pi"},
    {0x1D6E2, "alpha"},
    {0x1D6E3, "beta"},
    {0x1D6E4, "gamma"},
    {0x1D6E5, "delta"},
    {0x1D6E6, "epsilon"},
    {0x1D6E7, "zeta"},
    {0x1D6E8, "eta"},
    {0x1D6E9, "theta"},
    {0x1D6EA, "iota"},
    {0x1D6EB, "kappa"},
    {0x1D6EC, "lambda"},
    {0x1D6ED, "mu"},
    {0x1D6EE, "nu"},
    {0x1D6EF, "xi"},
    {0x1D6F0, "omicron"},
    {0x1D6F1, "pi"},
    {0x1D6F2, "rho"},
    {0x1D6F3, "theta"},
    {0x1D6F4, "sigma"},
    {0x1D6F5, "tau"},
    {0x1D6F6, "upsilon"},
    {0x1D6F7, "phi"},
    {0x1D6F8, "chi"},
    {0x1D6F9, "psi"},
    {0x1D6FA, "omega"},
    {0x1D6FC, "alpha"},
    {0x1D6FD, "beta"},
    {0x1D6FE, "gamma"},
    {0x1D6FF, "delta"},
    {0x1D700, "epsilon"},
    {0x1D701, "zeta"},
    {0x1D702, "eta"},
    {0x1D703, "theta"},
    {0x1D704, "iota"},
    {0x1D705, "kappa"},
    {0x1D706, "lambda"},
    {0x1D707, "mu"},
    {0x1D708, "nu"},
    {0x1D709, "xi"},
    {0x1D70A, "omicron"},
    {0x1D70B, "pi"},
    {0x1D70C, "rho"},
    {0x1D70D, "sigma"},
    {0x1D70E, "sigma"},
    {0x1D70F, "tau"},
    {0x1D710, "upsilon"},
    {0x1D711, "phi"},
    {0x1D712, "chi"},
    {0x1D713, "psi"},
    {0x1D714, "omega"},
    {0x1D716, "epsilon"},
    {0x1D717, "theta"},
    {0x1D718, "kappa"},
    {0x1D719, "phi"},
    {0x1D71A, "rho"},
    {0x1D71B, "pi"},
    {0x1D71C, "alpha"},
    {0x1D71D, "beta"},
    {0x1D71E, "gamma"},
    {0x1D71F, "delta"},
    {0x1D720, "epsilon"},
    {0x1D721, "zeta"},
    {0x1D722, "eta"},
    {0x1D723, "theta"},
    {0x1D724, "iota"},
    {0x1D725, "kappa"},
    {0x1D726, "lambda"},
    {0x1D727, "mu"},
    {0x1D728, "nu"},
    {0x1D729, "xi"},
    {0x1D72A, "omicron"},
    {0x1D72B, "pi"},
    {0x1D72C, "rho"},
    {0x1D72D, "theta"},
    {0x1D72E, "sigma"},
    {0x1D72F, "tau"},
    {0x1D730, "upsilon"},
    {0x1D731, "phi"},
    {0x1D732, "chi"},
    {0x1D733, "psi"},
    {0x1D734, "omega"},
    {0x1D736, "alpha"},
    {0x1D737, "beta"},
    {0x1D738, "gamma"},
    {0x1D739, "delta"},
    {0x1D73A, "epsilon"},
    {0x1D73B, "zeta"},
    {0x1D73C, "eta"},
    {0x1D73D, "theta"},
    {0x1D73E, "iota"},
    {0x1D73F, "kappa"},
    {0x1D740, "lambda"},
    {0x1D741, "mu"},
    {0x1D742, "nu"},
    {0x1D743, "xi"},
    {0x1D744, "omicron"},
    {0x1D745, "pi"},
    {0x1D746, "rho"},
    {0x1D747, "sigma"},
    {0x1D748, "sigma"},
    {0x1D749, "tau"},
    {0x1D74A, "upsilon"},
    {0x1D74B, "phi"},
    {0x1D74C, "chi"},
    {0x1D74D, "psi"},
    {0x1D74E, "omega"},
    {0x1D750, "epsilon"},
    {0x1D751, "theta"},
    {0x1D752, "kappa"},
    {0x1D753, "phi"},
    {0x1D754, "rho"},
    {0x1D755, "pi"},
    {0x1D756, "alpha"},
    {0x1D757, "beta"},
    {0x1D758, "gamma"},
    {0x1D759, "delta"},
    {0x1D75A, "epsilon"},
    {0x1D75B, "zeta"},
    {0x1D75C, "eta"},
    {0x1D75D, "theta"},
    {0x1D75E, "iota"},
    {0x1D75F, "kappa"},
    {0x1D760, "lambda"},
    {0x1D761, "mu"},
    {0x1D762, "nu"},
    {0x1D763, "xi"},
    {0x1D764, "omicron"},
    {0x1D765, "pi"},
    {0x1D766, "rho"},
    {0x1D767, "theta"},
    {0x1D768, "sigma"},
    {0x1D769, "tau"},
    {0x1D76A, "upsilon"},
    {0x1D76B, "phi"},
    {0x1D76C, "chi"},
    {0x1D76D, "psi"},
    {0x1D76E, "omega"},
    {0x1D770, "alpha"},
    {0x1D771, "beta"},
    {0x1D772, "gamma"},
    {0x1D773, "delta"},
    {0x1D774, "epsilon"},
    {0x1D775, "zeta"},
    {0x1D776, "eta"},
    {0x1D777, "theta"},
    {0x1D778, "iota"},
    {0x1D779, "kappa"},
    {0x1D77A, "lambda"},
    {0x1D77B, "mu"},
    {0x1D77C, "nu"},
    {0x1D77D, "xi"},
    {0x1D77E, "omicron"},
    {0x1D77F, "pi"},
    {0x1D780, "rho"},
    {0x1D781, "sigma"},
    {0x1D782, "sigma"},
    {0x1D783, "tau"},
    {0x1D784, "upsilon"},
    {0x1D785, "phi"},
    {0x1D786, "chi"},
    {0x1D787, "psi"},
    {0x1D788, "omega"},
    {0x1D78A, "epsilon"},
    {0x1D78B, "theta"},
    {0x1D78C, "kappa"},
    {0x1D78D, "phi"},
    {0x1D78E, "rho"},
    {0x1D78F, "pi"},
    {0x1D790, "alpha"},
    {0x1D791, "beta"},
    {0x1D792, "gamma"},
    {0x1D793, "delta"},
    {0x1D794, "epsilon"},
    {0x1D795, "zeta"},
    {0x1D796, "eta"},
    {0x1D797, "theta"},
    {0x1D798, "iota"},
    {0x1D799, "kappa"},
    {0x1D79A, "lambda"},
    {0x1D79B, "mu"},
    {0x1D79C, "nu"},
    {0x1D79D, "xi"},
    {0x1D79E, "omicron"},
    {0x1D79F, "pi"},
    {0x1D7A0, "rho"},
    {0x1D7A1, "theta"},
    {0x1D7A2, "sigma"},
    {0x1D7A3, "tau"},
    {0x1D7A4, "upsilon"},
    {0x1D7A5, "phi"},
    {0x1D7A6, "chi"},
    {0x1D7A7, "psi"},
    {0x1D7A8, "omega"},
    {0x1D7AA, "alpha"},
    {0x1D7AB, "beta"},
    {0x1D7AC, "gamma"},
    {0x1D7AD, "delta"},
    {0x1D7AE, "epsilon"},
    {0x1D7AF, "zeta"},
    {0x1D7B0, "eta"},
    {0x1D7B1, "theta"},
    {0x1D7B2, "iota"},
    {0x1D7B3, "kappa"},
    {0x1D7B4, "lambda"},
    {0x1D7B5, "mu"},
    {0x1D7B6, "nu"},
    {0x1D7B7, "xi"},
    {0x1D7B8, "omicron"},
    {0x1D7B9, "pi"},
    {0x1D7BA, "rho"},
    {0x1D7BB, "sigma"},
    {0x1D7BC, "sigma"},
    {0x1D7BD, "tau"},
    {0x1D7BE, "upsilon"},
    {0x1D7BF, "phi"},
    {0x1D7C0, "chi"},
    {0x1D7C1, "psi"},
    {0x1D7C2, "omega"},
    {0x1D7C4, "epsilon"},
    {0x1D7C5, "theta"},
    {0x1D7C6, "kappa"},
    {0x1D7C7, "phi"},
    {0x1D7C8, "rho"},
    {0x1D7C9, "pi"},
    {0x1D7CE, "0"},
    {0x1D7CF, "1"},
    {0x1D7D0, "2"},
    {0x1D7D1, "3"},
    {0x1D7D2, "4"},
    {0x1D7D3, "5"},
    {0x1D7D4, "6"},
    {0x1D7D5, "7"},
    {0x1D7D6, "8"},
    {0x1D7D7, "9"},
    {0x1D7D8, "0"},
    {0x1D7D9, "1"},
    {0x1D7DA, "2"},
    {0x1D7DB, "3"},
    {0x1D7DC, "4"},
    {0x1D7DD, "5"},
    {0x1D7DE, "6"},
    {0x1D7DF, "7"},
    {0x1D7E0, "8"},
    {0x1D7E1, "9"},
    {0x1D7E2, "0"},
    {0x1D7E3, "1"},
    {0x1D7E4, "2"},
    {0x1D7E5, "3"},
    {0x1D7E6, "4"},
    {0x1D7E7, "5"},
    {0x1D7E8, "6"},
    {0x1D7E9, "7"},
    {0x1D7EA, "8"},
    {0x1D7EB, "9"},
    {0x1D7EC, "0"},
    {0x1D7ED, "1"},
    {0x1D7EE, "2"},
    {0x1D7EF, "3"},
    {0x1D7F0, "4"},
    {0x1D7F1, "5"},
    {0x1D7F2, "6"},
    {0x1D7F3, "7"},
    {0x1D7F4, "8"},
    {0x1D7F5, "9"},
    {0x1D7F6, "0"},
    {0x1D7F7, "1"},
    {0x1D7F8, "2"},
    {0x1D7F9, "3"},
    {0x1D7FA, "4"},
    {0x1D7FB, "5"},
    {0x1D7FC, "6"},
    {0x1D7FD, "7"},
    {0x1D7FE, "8"},
    {0x1D7FF, "9"},
    {0x1F100, "0."},
    {0x1F101, "0,"},
    {0x1F102, "1,"},
    {0x1F103, "2,"},
    {0x1F104, "3,"},
    {0x1F105, "4,"},
    {0x1F106, "5,"},
    {0x1F107, "6,"},
    {0x1F108, "7,"},
    {0x1F109, "8,"},
    {0x1F10A, "9,"},
    {0x1F110, "(A)"},
    {0x1F111, "(B)"},
    {0x1F112, "(C)"},
    {0x1F113, "(D)"},
    {0x1F114, "(E)"},
    {0x1F115, "(F)"},
    {0x1F116, "(G)"},
    {0x1F117, "(H)"},
    {0x1F118, "(I)"},
    {0x1F119, "(J)"},
    {0x1F11A, "(K)"},
    {0x1F11B, "(L)"},
    {0x1F11C, "(M)"},
    {0x1F11D, "(N)"},
    {0x1F11E, "(O)"},
    {0x1F11F, "(P)"},
    {0x1F120, "(Q)"},
    {0x1F121, "(R)"},
    {0x1F122, "(S)"},
    {0x1F123, "(T)"},
    {0x1F124, "(U)"},
    {0x1F125, "(V)"},
    {0x1F126, "(W)"},
    {0x1F127, "(X)"},
    {0x1F128, "(Y)"},
    {0x1F129, "(Z)"},
    {0x1F12B, "C"},
    {0x1F12C, "R"},
    {0x1F12D, "CD"},
    {0x1F12E, "WZ"},
    {0x1F130, "A"},
    {0x1F131, "B"},
    {0x1F132, "C"},
    {0x1F133, "D"},
    {0x1F134, "E"},
    {0x1F135, "F"},
    {0x1F136, "G"},
    {0x1F137, "H"},
    {0x1F138, "I"},
    {0x1F139, "J"},
    {0x1F13A, "K"},
    {0x1F13B, "L"},
    {0x1F13C, "M"},
    {0x1F13D, "N"},
    {0x1F13E, "O"},
    {0x1F13F, "P"},
    {0x1F140, "Q"},
    {0x1F141, "R"},
    {0x1F142, "S"},
    {0x1F143, "T"},
    {0x1F144, "U"},
    {0x1F145, "V"},
    {0x1F146, "W"},
    {0x1F147, "X"},
    {0x1F148, "Y"},
    {0x1F149, "Z"},
    {0x1F14A, "HV"},
    {0x1F14B, "MV"},
    {0x1F14C, "SD"},
    {0x1F14D, "SS"},
    {0x1F14E, "PPV"},
    {0x1F14F, "WC"},
    {0x1F16A, "MC"},
    {0x1F16B, "MD"},
    {0x1F16C, "MR"},
    {0x1F190, "DJ"},
    {0x1FBF0, "0"},
    {0x1FBF1, "1"},
    {0x1FBF2, "2"},
    {0x1FBF3, "3"},
    {0x1FBF4, "4"},
    {0x1FBF5, "5"},
    {0x1FBF6, "6"},
    {0x1FBF7, "7"},
    {0x1FBF8, "8"},
    {0x1FBF9, "9"},
};
const std::size_t kFoldCount = sizeof(kFold) / sizeof(kFold[0]);

} // namespace bioc::translit::detail
