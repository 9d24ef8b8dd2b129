// Generated by tools/gen_unicode_tables.py (Unicode data from Python 3.10.12).
// Do not edit by hand.
#include "caudit/text/unicode_tables.hpp"

namespace caudit::uni {

const FoldEntry kFoldTable[] = {
    {0x41, "a"},
    {0x42, "b"},
    {0x43, "c"},
    {0x44, "d"},
    {0x45, "e"},
    {0x46, "f"},
    {0x47, "g"},
    {0x48, "h"},
    {0x49, "i"},
    {0x4A, "j"},
    {0x4B, "k"},
    {0x4C, "l"},
    {0x4D, "m"},
    {0x4E, "n"},
    {0x4F, "o"},
    {0x50, "p"},
    {0x51, "q"},
    {0x52, "r"},
    {0x53, "s"},
    {0x54, "t"},
    {0x55, "u"},
    {0x56, "v"},
    {0x57, "w"},
    {0x58, "x"},
    {0x59, "y"},
    {0x5A, "z"},
    {0xA0, " "},
    {0xA8, " \314\210"},
    {0xAA, "a"},
    {0xAF, " \314\204"},
    {0xB2, "2"},
    {0xB3, "3"},
    {0xB4, " \314\201"},
    {0xB5, "\316\274"},
    {0xB8, " \314\247"},
    {0xB9, "1"},
    {0xBA, "o"},
    {0xBC, "1\342\201\2044"},
    {0xBD, "1\342\201\2042"},
    {0xBE, "3\342\201\2044"},
    {0xC0, "\303\240"},
    {0xC1, "\303\241"},
    {0xC2, "\303\242"},
    {0xC3, "\303\243"},
    {0xC4, "\303\244"},
    {0xC5, "\303\245"},
    {0xC6, "\303\246"},
    {0xC7, "\303\247"},
    {0xC8, "\303\250"},
    {0xC9, "\303\251"},
    {0xCA, "\303\252"},
    {0xCB, "\303\253"},
    {0xCC, "\303\254"},
    {0xCD, "\303\255"},
    {0xCE, "\303\256"},
    {0xCF, "\303\257"},
    {0xD0, "\303\260"},
    {0xD1, "\303\261"},
    {0xD2, "\303\262"},
    {0xD3, "\303\263"},
    {0xD4, "\303\264"},
    {0xD5, "\303\265"},
    {0xD6, "\303\266"},
    {0xD8, "\303\270"},
    {0xD9, "\303\271"},
    {0xDA, "\303\272"},
    {0xDB, "\303\273"},
    {0xDC, "\303\274"},
    {0xDD, "\303\275"},
    {0xDE, "\303\276"},
    {0x100, "\304\201"},
    {0x102, "\304\203"},
    {0x104, "\304\205"},
    {0x106, "\304\207"},
    {0x108, "\304\211"},
    {0x10A, "\304\213"},
    {0x10C, "\304\215"},
    {0x10E, "\304\217"},
    {0x110, "\304\221"},
    {0x112, "\304\223"},
    {0x114, "\304\225"},
    {0x116, "\304\227"},
    {0x118, "\304\231"},
    {0x11A, "\304\233"},
    {0x11C, "\304\235"},
    {0x11E, "\304\237"},
    {0x120, "\304\241"},
    {0x122, "\304\243"},
    {0x124, "\304\245"},
    {0x126, "\304\247"},
    {0x128, "\304\251"},
    {0x12A, "\304\253"},
    {0x12C, "\304\255"},
    {0x12E, "\304\257"},
    {0x130, "i\314\207"},
    {0x132, "ij"},
    {0x133, "ij"},
    {0x134, "\304\265"},
    {0x136, "\304\267"},
    {0x139, "\304\272"},
    {0x13B, "\304\274"},
    {0x13D, "\304\276"},
    {0x13F, "l\302\267"},
    {0x140, "l\302\267"},
    {0x141, "\305\202"},
    {0x143, "\305\204"},
    {0x145, "\305\206"},
    {0x147, "\305\210"},
    {0x149, "\312\274n"},
    {0x14A, "\305\213"},
    {0x14C, "\305\215"},
    {0x14E, "\305\217"},
    {0x150, "\305\221"},
    {0x152, "\305\223"},
    {0x154, "\305\225"},
    {0x156, "\305\227"},
    {0x158, "\305\231"},
    {0x15A, "\305\233"},
    {0x15C, "\305\235"},
    {0x15E, "\305\237"},
    {0x160, "\305\241"},
    {0x162, "\305\243"},
    {0x164, "\305\245"},
    {0x166, "\305\247"},
    {0x168, "\305\251"},
    {0x16A, "\305\253"},
    {0x16C, "\305\255"},
    {0x16E, "\305\257"},
    {0x170, "\305\261"},
    {0x172, "\305\263"},
    {0x174, "\305\265"},
    {0x176, "\305\267"},
    {0x178, "\303\277"},
    {0x179, "\305\272"},
    {0x17B, "\305\274"},
    {0x17D, "\305\276"},
    {0x17F, "s"},
    {0x181, "\311\223"},
    {0x182, "\306\203"},
    {0x184, "\306\205"},
    {0x186, "\311\224"},
    {0x187, "\306\210"},
    {0x189, "\311\226"},
    {0x18A, "\311\227"},
    {0x18B, "\306\214"},
    {0x18E, "\307\235"},
    {0x18F, "\311\231"},
    {0x190, "\311\233"},
    {0x191, "\306\222"},
    {0x193, "\311\240"},
    {0x194, "\311\243"},
    {0x196, "\311\251"},
    {0x197, "\311\250"},
    {0x198, "\306\231"},
    {0x19C, "\311\257"},
    {0x19D, "\311\262"},
    {0x19F, "\311\265"},
    {0x1A0, "\306\241"},
    {0x1A2, "\306\243"},
    {0x1A4, "\306\245"},
    {0x1A6, "\312\200"},
    {0x1A7, "\306\250"},
    {0x1A9, "\312\203"},
    {0x1AC, "\306\255"},
    {0x1AE, "\312\210"},
    {0x1AF, "\306\260"},
    {0x1B1, "\312\212"},
    {0x1B2, "\312\213"},
    {0x1B3, "\306\264"},
    {0x1B5, "\306\266"},
    {0x1B7, "\312\222"},
    {0x1B8, "\306\271"},
    {0x1BC, "\306\275"},
    {0x1C4, "d\305\276"},
    {0x1C5, "d\305\276"},
    {0x1C6, "d\305\276"},
    {0x1C7, "lj"},
    {0x1C8, "lj"},
    {0x1C9, "lj"},
    {0x1CA, "nj"},
    {0x1CB, "nj"},
    {0x1CC, "nj"},
    {0x1CD, "\307\216"},
    {0x1CF, "\307\220"},
    {0x1D1, "\307\222"},
    {0x1D3, "\307\224"},
    {0x1D5, "\307\226"},
    {0x1D7, "\307\230"},
    {0x1D9, "\307\232"},
    {0x1DB, "\307\234"},
    {0x1DE, "\307\237"},
    {0x1E0, "\307\241"},
    {0x1E2, "\307\243"},
    {0x1E4, "\307\245"},
    {0x1E6, "\307\247"},
    {0x1E8, "\307\251"},
    {0x1EA, "\307\253"},
    {0x1EC, "\307\255"},
    {0x1EE, "\307\257"},
    {0x1F1, "dz"},
    {0x1F2, "dz"},
    {0x1F3, "dz"},
    {0x1F4, "\307\265"},
    {0x1F6, "\306\225"},
    {0x1F7, "\306\277"},
    {0x1F8, "\307\271"},
    {0x1FA, "\307\273"},
    {0x1FC, "\307\275"},
    {0x1FE, "\307\277"},
    {0x200, "\310\201"},
    {0x202, "\310\203"},
    {0x204, "\310\205"},
    {0x206, "\310\207"},
    {0x208, "\310\211"},
    {0x20A, "\310\213"},
    {0x20C, "\310\215"},
    {0x20E, "\310\217"},
    {0x210, "\310\221"},
    {0x212, "\310\223"},
    {0x214, "\310\225"},
    {0x216, "\310\227"},
    {0x218, "\310\231"},
    {0x21A, "\310\233"},
    {0x21C, "\310\235"},
    {0x21E, "\310\237"},
    {0x220, "\306\236"},
    {0x222, "\310\243"},
    {0x224, "\310\245"},
    {0x226, "\310\247"},
    {0x228, "\310\251"},
    {0x22A, "\310\253"},
    {0x22C, "\310\255"},
    {0x22E, "\310\257"},
    {0x230, "\310\261"},
    {0x232, "\310\263"},
    {0x23A, "\342\261\245"},
    {0x23B, "\310\274"},
    {0x23D, "\306\232"},
    {0x23E, "\342\261\246"},
    {0x241, "\311\202"},
    {0x243, "\306\200"},
    {0x244, "\312\211"},
    {0x245, "\312\214"},
    {0x246, "\311\207"},
    {0x248, "\311\211"},
    {0x24A, "\311\213"},
    {0x24C, "\311\215"},
    {0x24E, "\311\217"},
    {0x2B0, "h"},
    {0x2B1, "\311\246"},
    {0x2B2, "j"},
    {0x2B3, "r"},
    {0x2B4, "\311\271"},
    {0x2B5, "\311\273"},
    {0x2B6, "\312\201"},
    {0x2B7, "w"},
    {0x2B8, "y"},
    {0x2D8, " \314\206"},
    {0x2D9, " \314\207"},
    {0x2DA, " \314\212"},
    {0x2DB, " \314\250"},
    {0x2DC, " \314\203"},
    {0x2DD, " \314\213"},
    {0x2E0, "\311\243"},
    {0x2E1, "l"},
    {0x2E2, "s"},
    {0x2E3, "x"},
    {0x2E4, "\312\225"},
    {0x340, "\314\200"},
    {0x341, "\314\201"},
    {0x343, "\314\223"},
    {0x344, "\314\210\314\201"},
    {0x370, "\315\261"},
    {0x372, "\315\263"},
    {0x374, "\312\271"},
    {0x376, "\315\267"},
    {0x37A, " \315\205"},
    {0x37E, ";"},
    {0x37F, "\317\263"},
    {0x384, " \314\201"},
    {0x385, " \314\210\314\201"},
    {0x386, "\316\254"},
    {0x387, "\302\267"},
    {0x388, "\316\255"},
    {0x389, "\316\256"},
    {0x38A, "\316\257"},
    {0x38C, "\317\214"},
    {0x38E, "\317\215"},
    {0x38F, "\317\216"},
    {0x391, "\316\261"},
    {0x392, "\316\262"},
    {0x393, "\316\263"},
    {0x394, "\316\264"},
    {0x395, "\316\265"},
    {0x396, "\316\266"},
    {0x397, "\316\267"},
    {0x398, "\316\270"},
    {0x399, "\316\271"},
    {0x39A, "\316\272"},
    {0x39B, "\316\273"},
    {0x39C, "\316\274"},
    {0x39D, "\316\275"},
    {0x39E, "\316\276"},
    {0x39F, "\316\277"},
    {0x3A0, "\317\200"},
    {0x3A1, "\317\201"},
    {0x3A3, "\317\203"},
    {0x3A4, "\317\204"},
    {0x3A5, "\317\205"},
    {0x3A6, "\317\206"},
    {0x3A7, "\317\207"},
    {0x3A8, "\317\210"},
    {0x3A9, "\317\211"},
    {0x3AA, "\317\212"},
    {0x3AB, "\317\213"},
    {0x3CF, "\317\227"},
    {0x3D0, "\316\262"},
    {0x3D1, "\316\270"},
    {0x3D2, "\317\205"},
    {0x3D3, "\317\215"},
    {0x3D4, "\317\213"},
    {0x3D5, "\317\206"},
    {0x3D6, "\317\200"},
    {0x3D8, "\317\231"},
    {0x3DA, "\317\233"},
    {0x3DC, "\317\235"},
    {0x3DE, "\317\237"},
    {0x3E0, "\317\241"},
    {0x3E2, "\317\243"},
    {0x3E4, "\317\245"},
    {0x3E6, "\317\247"},
    {0x3E8, "\317\251"},
    {0x3EA, "\317\253"},
    {0x3EC, "\317\255"},
    {0x3EE, "\317\257"},
    {0x3F0, "\316\272"},
    {0x3F1, "\317\201"},
    {0x3F2, "\317\202"},
    {0x3F4, "\316\270"},
    {0x3F5, "\316\265"},
    {0x3F7, "\317\270"},
    {0x3F9, "\317\203"},
    {0x3FA, "\317\273"},
    {0x3FD, "\315\273"},
    {0x3FE, "\315\274"},
    {0x3FF, "\315\275"},
    {0x400, "\321\220"},
    {0x401, "\321\221"},
    {0x402, "\321\222"},
    {0x403, "\321\223"},
    {0x404, "\321\224"},
    {0x405, "\321\225"},
    {0x406, "\321\226"},
    {0x407, "\321\227"},
    {0x408, "\321\230"},
    {0x409, "\321\231"},
    {0x40A, "\321\232"},
    {0x40B, "\321\233"},
    {0x40C, "\321\234"},
    {0x40D, "\321\235"},
    {0x40E, "\321\236"},
    {0x40F, "\321\237"},
    {0x410, "\320\260"},
    {0x411, "\320\261"},
    {0x412, "\320\262"},
    {0x413, "\320\263"},
    {0x414, "\320\264"},
    {0x415, "\320\265"},
    {0x416, "\320\266"},
    {0x417, "\320\267"},
    {0x418, "\320\270"},
    {0x419, "\320\271"},
    {0x41A, "\320\272"},
    {0x41B, "\320\273"},
    {0x41C, "\320\274"},
    {0x41D, "\320\275"},
    {0x41E, "\320\276"},
    {0x41F, "\320\277"},
    {0x420, "\321\200"},
    {0x421, "\321\201"},
    {0x422, "\321\202"},
    {0x423, "\321\203"},
    {0x424, "\321\204"},
    {0x425, "\321\205"},
    {0x426, "\321\206"},
    {0x427, "\321\207"},
    {0x428, "\321\210"},
    {0x429, "\321\211"},
    {0x42A, "\321\212"},
    {0x42B, "\321\213"},
    {0x42C, "\321\214"},
    {0x42D, "\321\215"},
    {0x42E, "\321\216"},
    {0x42F, "\321\217"},
    {0x460, "\321\241"},
    {0x462, "\321\243"},
    {0x464, "\321\245"},
    {0x466, "\321\247"},
    {0x468, "\321\251"},
    {0x46A, "\321\253"},
    {0x46C, "\321\255"},
    {0x46E, "\321\257"},
    {0x470, "\321\261"},
    {0x472, "\321\263"},
    {0x474, "\321\265"},
    {0x476, "\321\267"},
    {0x478, "\321\271"},
    {0x47A, "\321\273"},
    {0x47C, "\321\275"},
    {0x47E, "\321\277"},
    {0x480, "\322\201"},
    {0x48A, "\322\213"},
    {0x48C, "\322\215"},
    {0x48E, "\322\217"},
    {0x490, "\322\221"},
    {0x492, "\322\223"},
    {0x494, "\322\225"},
    {0x496, "\322\227"},
    {0x498, "\322\231"},
    {0x49A, "\322\233"},
    {0x49C, "\322\235"},
    {0x49E, "\322\237"},
    {0x4A0, "\322\241"},
    {0x4A2, "\322\243"},
    {0x4A4, "\322\245"},
    {0x4A6, "\322\247"},
    {0x4A8, "\322\251"},
    {0x4AA, "\322\253"},
    {0x4AC, "\322\255"},
    {0x4AE, "\322\257"},
    {0x4B0, "\322\261"},
    {0x4B2, "\322\263"},
    {0x4B4, "\322\265"},
    {0x4B6, "\322\267"},
    {0x4B8, "\322\271"},
    {0x4BA, "\322\273"},
    {0x4BC, "\322\275"},
    {0x4BE, "\322\277"},
    {0x4C0, "\323\217"},
    {0x4C1, "\323\202"},
    {0x4C3, "\323\204"},
    {0x4C5, "\323\206"},
    {0x4C7, "\323\210"},
    {0x4C9, "\323\212"},
    {0x4CB, "\323\214"},
    {0x4CD, "\323\216"},
    {0x4D0, "\323\221"},
    {0x4D2, "\323\223"},
    {0x4D4, "\323\225"},
    {0x4D6, "\323\227"},
    {0x4D8, "\323\231"},
    {0x4DA, "\323\233"},
    {0x4DC, "\323\235"},
    {0x4DE, "\323\237"},
    {0x4E0, "\323\241"},
    {0x4E2, "\323\243"},
    {0x4E4, "\323\245"},
    {0x4E6, "\323\247"},
    {0x4E8, "\323\251"},
    {0x4EA, "\323\253"},
    {0x4EC, "\323\255"},
    {0x4EE, "\323\257"},
    {0x4F0, "\323\261"},
    {0x4F2, "\323\263"},
    {0x4F4, "\323\265"},
    {0x4F6, "\323\267"},
    {0x4F8, "\323\271"},
    {0x4FA, "\323\273"},
    {0x4FC, "\323\275"},
    {0x4FE, "\323\277"},
    {0x500, "\324\201"},
    {0x502, "\324\203"},
    {0x504, "\324\205"},
    {0x506, "\324\207"},
    {0x508, "\324\211"},
    {0x50A, "\324\213"},
    {0x50C, "\324\215"},
    {0x50E, "\324\217"},
    {0x510, "\324\221"},
    {0x512, "\324\223"},
    {0x514, "\324\225"},
    {0x516, "\324\227"},
    {0x518, "\324\231"},
    {0x51A, "\324\233"},
    {0x51C, "\324\235"},
    {0x51E, "\324\237"},
    {0x520, "\324\241"},
    {0x522, "\324\243"},
    {0x524, "\324\245"},
    {0x526, "\324\247"},
    {0x528, "\324\251"},
    {0x52A, "\324\253"},
    {0x52C, "\324\255"},
    {0x52E, "\324\257"},
    {0x531, "\325\241"},
    {0x532, "\325\242"},
    {0x533, "\325\243"},
    {0x534, "\325\244"},
    {0x535, "\325\245"},
    {0x536, "\325\246"},
    {0x537, "\325\247"},
    {0x538, "\325\250"},
    {0x539, "\325\251"},
    {0x53A, "\325\252"},
    {0x53B, "\325\253"},
    {0x53C, "\325\254"},
    {0x53D, "\325\255"},
    {0x53E, "\325\256"},
    {0x53F, "\325\257"},
    {0x540, "\325\260"},
    {0x541, "\325\261"},
    {0x542, "\325\262"},
    {0x543, "\325\263"},
    {0x544, "\325\264"},
    {0x545, "\325\265"},
    {0x546, "\325\266"},
    {0x547, "\325\267"},
    {0x548, "\325\270"},
    {0x549, "\325\271"},
    {0x54A, "\325\272"},
    {0x54B, "\325\273"},
    {0x54C, "\325\274"},
    {0x54D, "\325\275"},
    {0x54E, "\325\276"},
    {0x54F, "\325\277"},
    {0x550, "\326\200"},
    {0x551, "\326\201"},
    {0x552, "\326\202"},
    {0x553, "\326\203"},
    {0x554, "\326\204"},
    {0x555, "\326\205"},
    {0x556, "\326\206"},
    {0x587, "\325\245\326\202"},
    {0x675, "\330\247\331\264"},
    {0x676, "\331\210\331\264"},
    {0x677, "\333\207\331\264"},
    {0x678, "\331\212\331\264"},
    {0x958, "\340\244\225\340\244\274"},
    {0x959, "\340\244\226\340\244\274"},
    {0x95A, "\340\244\227\340\244\274"},
    {0x95B, "\340\244\234\340\244\274"},
    {0x95C, "\340\244\241\340\244\274"},
    {0x95D, "\340\244\242\340\244\274"},
    {0x95E, "\340\244\253\340\244\274"},
    {0x95F, "\340\244\257\340\244\274"},
    {0x9DC, "\340\246\241\340\246\274"},
    {0x9DD, "\340\246\242\340\246\274"},
    {0x9DF, "\340\246\257\340\246\274"},
    {0xA33, "\340\250\262\340\250\274"},
    {0xA36, "\340\250\270\340\250\274"},
    {0xA59, "\340\250\226\340\250\274"},
    {0xA5A, "\340\250\227\340\250\274"},
    {0xA5B, "\340\250\234\340\250\274"},
    {0xA5E, "\340\250\253\340\250\274"},
    {0xB5C, "\340\254\241\340\254\274"},
    {0xB5D, "\340\254\242\340\254\274"},
    {0xE33, "\340\271\215\340\270\262"},
    {0xEB3, "\340\273\215\340\272\262"},
    {0xEDC, "\340\272\253\340\272\231"},
    {0xEDD, "\340\272\253\340\272\241"},
    {0xF0C, "\340\274\213"},
    {0xF43, "\340\275\202\340\276\267"},
    {0xF4D, "\340\275\214\340\276\267"},
    {0xF52, "\340\275\221\340\276\267"},
    {0xF57, "\340\275\226\340\276\267"},
    {0xF5C, "\340\275\233\340\276\267"},
    {0xF69, "\340\275\200\340\276\265"},
    {0xF73, "\340\275\261\340\275\262"},
    {0xF75, "\340\275\261\340\275\264"},
    {0xF76, "\340\276\262\340\276\200"},
    {0xF77, "\340\276\262\340\275\261\340\276\200"},
    {0xF78, "\340\276\263\340\276\200"},
    {0xF79, "\340\276\263\340\275\261\340\276\200"},
    {0xF81, "\340\275\261\340\276\200"},
    {0xF93, "\340\276\222\340\276\267"},
    {0xF9D, "\340\276\234\340\276\267"},
    {0xFA2, "\340\276\241\340\276\267"},
    {0xFA7, "\340\276\246\340\276\267"},
    {0xFAC, "\340\276\253\340\276\267"},
    {0xFB9, "\340\276\220\340\276\265"},
    {0x10A0, "\342\264\200"},
    {0x10A1, "\342\264\201"},
    {0x10A2, "\342\264\202"},
    {0x10A3, "\342\264\203"},
    {0x10A4, "\342\264\204"},
    {0x10A5, "\342\264\205"},
    {0x10A6, "\342\264\206"},
    {0x10A7, "\342\264\207"},
    {0x10A8, "\342\264\210"},
    {0x10A9, "\342\264\211"},
    {0x10AA, "\342\264\212"},
    {0x10AB, "\342\264\213"},
    {0x10AC, "\342\264\214"},
    {0x10AD, "\342\264\215"},
    {0x10AE, "\342\264\216"},
    {0x10AF, "\342\264\217"},
    {0x10B0, "\342\264\220"},
    {0x10B1, "\342\264\221"},
    {0x10B2, "\342\264\222"},
    {0x10B3, "\342\264\223"},
    {0x10B4, "\342\264\224"},
    {0x10B5, "\342\264\225"},
    {0x10B6, "\342\264\226"},
    {0x10B7, "\342\264\227"},
    {0x10B8, "\342\264\230"},
    {0x10B9, "\342\264\231"},
    {0x10BA, "\342\264\232"},
    {0x10BB, "\342\264\233"},
    {0x10BC, "\342\264\234"},
    {0x10BD, "\342\264\235"},
    {0x10BE, "\342\264\236"},
    {0x10BF, "\342\264\237"},
    {0x10C0, "\342\264\240"},
    {0x10C1, "\342\264\241"},
    {0x10C2, "\342\264\242"},
    {0x10C3, "\342\264\243"},
    {0x10C4, "\342\264\244"},
    {0x10C5, "\342\264\245"},
    {0x10C7, "\342\264\247"},
    {0x10CD, "\342\264\255"},
    {0x10FC, "\341\203\234"},
    {0x13A0, "\352\255\260"},
    {0x13A1, "\352\255\261"},
    {0x13A2, "\352\255\262"},
    {0x13A3, "\352\255\263"},
    {0x13A4, "\352\255\264"},
    {0x13A5, "\352\255\265"},
    {0x13A6, "\352\255\266"},
    {0x13A7, "\352\255\267"},
    {0x13A8, "\352\255\270"},
    {0x13A9, "\352\255\271"},
    {0x13AA, "\352\255\272"},
    {0x13AB, "\352\255\273"},
    {0x13AC, "\352\255\274"},
    {0x13AD, "\352\255\275"},
    {0x13AE, "\352\255\276"},
    {0x13AF, "\352\255\277"},
    {0x13B0, "\352\256\200"},
    {0x13B1, "\352\256\201"},
    {0x13B2, "\352\256\202"},
    {0x13B3, "\352\256\203"},
    {0x13B4, "\352\256\204"},
    {0x13B5, "\352\256\205"},
    {0x13B6, "\352\256\206"},
    {0x13B7, "\352\256\207"},
    {0x13B8, "\352\256\210"},
    {0x13B9, "\352\256\211"},
    {0x13BA, "\352\256\212"},
    {0x13BB, "\352\256\213"},
    {0x13BC, "\352\256\214"},
    {0x13BD, "\352\256\215"},
    {0x13BE, "\352\256\216"},
    {0x13BF, "\352\256\217"},
    {0x13C0, "\352\256\220"},
    {0x13C1, "\352\256\221"},
    {0x13C2, "\352\256\222"},
    {0x13C3, "\352\256\223"},
    {0x13C4, "\352\256\224"},
    {0x13C5, "\352\256\225"},
    {0x13C6, "\352\256\226"},
    {0x13C7, "\352\256\227"},
    {0x13C8, "\352\256\230"},
    {0x13C9, "\352\256\231"},
    {0x13CA, "\352\256\232"},
    {0x13CB, "\352\256\233"},
    {0x13CC, "\352\256\234"},
    {0x13CD, "\352\256\235"},
    {0x13CE, "\352\256\236"},
    {0x13CF, "\352\256\237"},
    {0x13D0, "\352\256\240"},
    {0x13D1, "\352\256\241"},
    {0x13D2, "\352\256\242"},
    {0x13D3, "\352\256\243"},
    {0x13D4, "\352\256\244"},
    {0x13D5, "\352\256\245"},
    {0x13D6, "\352\256\246"},
    {0x13D7, "\352\256\247"},
    {0x13D8, "\352\256\250"},
    {0x13D9, "\352\256\251"},
    {0x13DA, "\352\256\252"},
    {0x13DB, "\352\256\253"},
    {0x13DC, "\352\256\254"},
    {0x13DD, "\352\256\255"},
    {0x13DE, "\352\256\256"},
    {0x13DF, "\352\256\257"},
    {0x13E0, "\352\256\260"},
    {0x13E1, "\352\256\261"},
    {0x13E2, "\352\256\262"},
    {0x13E3, "\352\256\263"},
    {0x13E4, "\352\256\264"},
    {0x13E5, "\352\256\265"},
    {0x13E6, "\352\256\266"},
    {0x13E7, "\352\256\267"},
    {0x13E8, "\352\256\270"},
    {0x13E9, "\352\256\271"},
    {0x13EA, "\352\256\272"},
    {0x13EB, "\352\256\273"},
    {0x13EC, "\352\256\274"},
    {0x13ED, "\352\256\275"},
    {0x13EE, "\352\256\276"},
    {0x13EF, "\352\256\277"},
    {0x13F0, "\341\217\270"},
    {0x13F1, "\341\217\271"},
    {0x13F2, "\341\217\272"},
    {0x13F3, "\341\217\273"},
    {0x13F4, "\341\217\274"},
    {0x13F5, "\341\217\275"},
    {0x1C90, "\341\203\220"},
    {0x1C91, "\341\203\221"},
    {0x1C92, "\341\203\222"},
    {0x1C93, "\341\203\223"},
    {0x1C94, "\341\203\224"},
    {0x1C95, "\341\203\225"},
    {0x1C96, "\341\203\226"},
    {0x1C97, "\341\203\227"},
    {0x1C98, "\341\203\230"},
    {0x1C99, "\341\203\231"},
    {0x1C9A, "\341\203\232"},
    {0x1C9B, "\341\203\233"},
    {0x1C9C, "\341\203\234"},
    {0x1C9D, "\341\203\235"},
    {0x1C9E, "\341\203\236"},
    {0x1C9F, "\341\203\237"},
    {0x1CA0, "\341\203\240"},
    {0x1CA1, "\341\203\241"},
    {0x1CA2, "\341\203\242"},
    {0x1CA3, "\341\203\243"},
    {0x1CA4, "\341\203\244"},
    {0x1CA5, "\341\203\245"},
    {0x1CA6, "\341\203\246"},
    {0x1CA7, "\341\203\247"},
    {0x1CA8, "\341\203\250"},
    {0x1CA9, "\341\203\251"},
    {0x1CAA, "\341\203\252"},
    {0x1CAB, "\341\203\253"},
    {0x1CAC, "\341\203\254"},
    {0x1CAD, "\341\203\255"},
    {0x1CAE, "\341\203\256"},
    {0x1CAF, "\341\203\257"},
    {0x1CB0, "\341\203\260"},
    {0x1CB1, "\341\203\261"},
    {0x1CB2, "\341\203\262"},
    {0x1CB3, "\341\203\263"},
    {0x1CB4, "\341\203\264"},
    {0x1CB5, "\341\203\265"},
    {0x1CB6, "\341\203\266"},
    {0x1CB7, "\341\203\267"},
    {0x1CB8, "\341\203\270"},
    {0x1CB9, "\341\203\271"},
    {0x1CBA, "\341\203\272"},
    {0x1CBD, "\341\203\275"},
    {0x1CBE, "\341\203\276"},
    {0x1CBF, "\341\203\277"},
    {0x1D2C, "a"},
    {0x1D2D, "\303\246"},
    {0x1D2E, "b"},
    {0x1D30, "d"},
    {0x1D31, "e"},
    {0x1D32, "\307\235"},
    {0x1D33, "g"},
    {0x1D34, "h"},
    {0x1D35, "i"},
    {0x1D36, "j"},
    {0x1D37, "k"},
    {0x1D38, "l"},
    {0x1D39, "m"},
    {0x1D3A, "n"},
    {0x1D3C, "o"},
    {0x1D3D, "\310\243"},
    {0x1D3E, "p"},
    {0x1D3F, "r"},
    {0x1D40, "t"},
    {0x1D41, "u"},
    {0x1D42, "w"},
    {0x1D43, "a"},
    {0x1D44, "\311\220"},
    {0x1D45, "\311\221"},
    {0x1D46, "\341\264\202"},
    {0x1D47, "b"},
    {0x1D48, "d"},
    {0x1D49, "e"},
    {0x1D4A, "\311\231"},
    {0x1D4B, "\311\233"},
    {0x1D4C, "\311\234"},
    {0x1D4D, "g"},
    {0x1D4F, "k"},
    {0x1D50, "m"},
    {0x1D51, "\305\213"},
    {0x1D52, "o"},
    {0x1D53, "\311\224"},
    {0x1D54, "\341\264\226"},
    {0x1D55, "\341\264\227"},
    {0x1D56, "p"},
    {0x1D57, "t"},
    {0x1D58, "u"},
    {0x1D59, "\341\264\235"},
    {0x1D5A, "\311\257"},
    {0x1D5B, "v"},
    {0x1D5C, "\341\264\245"},
    {0x1D5D, "\316\262"},
    {0x1D5E, "\316\263"},
    {0x1D5F, "\316\264"},
    {0x1D60, "\317\206"},
    {0x1D61, "\317\207"},
    {0x1D62, "i"},
    {0x1D63, "r"},
    {0x1D64, "u"},
    {0x1D65, "v"},
    {0x1D66, "\316\262"},
    {0x1D67, "\316\263"},
    {0x1D68, "\317\201"},
    {0x1D69, "\317\206"},
    {0x1D6A, "\317\207"},
    {0x1D78, "\320\275"},
    {0x1D9B, "\311\222"},
    {0x1D9C, "c"},
    {0x1D9D, "\311\225"},
    {0x1D9E, "\303\260"},
    {0x1D9F, "\311\234"},
    {0x1DA0, "f"},
    {0x1DA1, "\311\237"},
    {0x1DA2, "\311\241"},
    {0x1DA3, "\311\245"},
    {0x1DA4, "\311\250"},
    {0x1DA5, "\311\251"},
    {0x1DA6, "\311\252"},
    {0x1DA7, "\341\265\273"},
    {0x1DA8, "\312\235"},
    {0x1DA9, "\311\255"},
    {0x1DAA, "\341\266\205"},
    {0x1DAB, "\312\237"},
    {0x1DAC, "\311\261"},
    {0x1DAD, "\311\260"},
    {0x1DAE, "\311\262"},
    {0x1DAF, "\311\263"},
    {0x1DB0, "\311\264"},
    {0x1DB1, "\311\265"},
    {0x1DB2, "\311\270"},
    {0x1DB3, "\312\202"},
    {0x1DB4, "\312\203"},
    {0x1DB5, "\306\253"},
    {0x1DB6, "\312\211"},
    {0x1DB7, "\312\212"},
    {0x1DB8, "\341\264\234"},
    {0x1DB9, "\312\213"},
    {0x1DBA, "\312\214"},
    {0x1DBB, "z"},
    {0x1DBC, "\312\220"},
    {0x1DBD, "\312\221"},
    {0x1DBE, "\312\222"},
    {0x1DBF, "\316\270"},
    {0x1E00, "\341\270\201"},
    {0x1E02, "\341\270\203"},
    {0x1E04, "\341\270\205"},
    {0x1E06, "\341\270\207"},
    {0x1E08, "\341\270\211"},
    {0x1E0A, "\341\270\213"},
    {0x1E0C, "\341\270\215"},
    {0x1E0E, "\341\270\217"},
    {0x1E10, "\341\270\221"},
    {0x1E12, "\341\270\223"},
    {0x1E14, "\341\270\225"},
    {0x1E16, "\341\270\227"},
    {0x1E18, "\341\270\231"},
    {0x1E1A, "\341\270\233"},
    {0x1E1C, "\341\270\235"},
    {0x1E1E, "\341\270\237"},
    {0x1E20, "\341\270\241"},
    {0x1E22, "\341\270\243"},
    {0x1E24, "\341\270\245"},
    {0x1E26, "\341\270\247"},
    {0x1E28, "\341\270\251"},
    {0x1E2A, "\341\270\253"},
    {0x1E2C, "\341\270\255"},
    {0x1E2E, "\341\270\257"},
    {0x1E30, "\341\270\261"},
    {0x1E32, "\341\270\263"},
    {0x1E34, "\341\270\265"},
    {0x1E36, "\341\270\267"},
    {0x1E38, "\341\270\271"},
    {0x1E3A, "\341\270\273"},
    {0x1E3C, "\341\270\275"},
    {0x1E3E, "\341\270\277"},
    {0x1E40, "\341\271\201"},
    {0x1E42, "\341\271\203"},
    {0x1E44, "\341\271\205"},
    {0x1E46, "\341\271\207"},
    {0x1E48, "\341\271\211"},
    {0x1E4A, "\341\271\213"},
    {0x1E4C, "\341\271\215"},
    {0x1E4E, "\341\271\217"},
    {0x1E50, "\341\271\221"},
    {0x1E52, "\341\271\223"},
    {0x1E54, "\341\271\225"},
    {0x1E56, "\341\271\227"},
    {0x1E58, "\341\271\231"},
    {0x1E5A, "\341\271\233"},
    {0x1E5C, "\341\271\235"},
    {0x1E5E, "\341\271\237"},
    {0x1E60, "\341\271\241"},
    {0x1E62, "\341\271\243"},
    {0x1E64, "\341\271\245"},
    {0x1E66, "\341\271\247"},
    {0x1E68, "\341\271\251"},
    {0x1E6A, "\341\271\253"},
    {0x1E6C, "\341\271\255"},
    {0x1E6E, "\341\271\257"},
    {0x1E70, "\341\271\261"},
    {0x1E72, "\341\271\263"},
    {0x1E74, "\341\271\265"},
    {0x1E76, "\341\271\267"},
    {0x1E78, "\341\271\271"},
    {0x1E7A, "\341\271\273"},
    {0x1E7C, "\341\271\275"},
    {0x1E7E, "\341\271\277"},
    {0x1E80, "\341\272\201"},
    {0x1E82, "\341\272\203"},
    {0x1E84, "\341\272\205"},
    {0x1E86, "\341\272\207"},
    {0x1E88, "\341\272\211"},
    {0x1E8A, "\341\272\213"},
    {0x1E8C, "\341\272\215"},
    {0x1E8E, "\341\272\217"},
    {0x1E90, "\341\272\221"},
    {0x1E92, "\341\272\223"},
    {0x1E94, "\341\272\225"},
    {0x1E9A, "a\312\276"},
    {0x1E9B, "\341\271\241"},
    {0x1E9E, "\303\237"},
    {0x1EA0, "\341\272\241"},
    {0x1EA2, "\341\272\243"},
    {0x1EA4, "\341\272\245"},
    {0x1EA6, "\341\272\247"},
    {0x1EA8, "\341\272\251"},
    {0x1EAA, "\341\272\253"},
    {0x1EAC, "\341\272\255"},
    {0x1EAE, "\341\272\257"},
    {0x1EB0, "\341\272\261"},
    {0x1EB2, "\341\272\263"},
    {0x1EB4, "\341\272\265"},
    {0x1EB6, "\341\272\267"},
    {0x1EB8, "\341\272\271"},
    {0x1EBA, "\341\272\273"},
    {0x1EBC, "\341\272\275"},
    {0x1EBE, "\341\272\277"},
    {0x1EC0, "\341\273\201"},
    {0x1EC2, "\341\273\203"},
    {0x1EC4, "\341\273\205"},
    {0x1EC6, "\341\273\207"},
    {0x1EC8, "\341\273\211"},
    {0x1ECA, "\341\273\213"},
    {0x1ECC, "\341\273\215"},
    {0x1ECE, "\341\273\217"},
    {0x1ED0, "\341\273\221"},
    {0x1ED2, "\341\273\223"},
    {0x1ED4, "\341\273\225"},
    {0x1ED6, "\341\273\227"},
    {0x1ED8, "\341\273\231"},
    {0x1EDA, "\341\273\233"},
    {0x1EDC, "\341\273\235"},
    {0x1EDE, "\341\273\237"},
    {0x1EE0, "\341\273\241"},
    {0x1EE2, "\341\273\243"},
    {0x1EE4, "\341\273\245"},
    {0x1EE6, "\341\273\247"},
    {0x1EE8, "\341\273\251"},
    {0x1EEA, "\341\273\253"},
    {0x1EEC, "\341\273\255"},
    {0x1EEE, "\341\273\257"},
    {0x1EF0, "\341\273\261"},
    {0x1EF2, "\341\273\263"},
    {0x1EF4, "\341\273\265"},
    {0x1EF6, "\341\273\267"},
    {0x1EF8, "\341\273\271"},
    {0x1EFA, "\341\273\273"},
    {0x1EFC, "\341\273\275"},
    {0x1EFE, "\341\273\277"},
    {0x1F08, "\341\274\200"},
    {0x1F09, "\341\274\201"},
    {0x1F0A, "\341\274\202"},
    {0x1F0B, "\341\274\203"},
    {0x1F0C, "\341\274\204"},
    {0x1F0D, "\341\274\205"},
    {0x1F0E, "\341\274\206"},
    {0x1F0F, "\341\274\207"},
    {0x1F18, "\341\274\220"},
    {0x1F19, "\341\274\221"},
    {0x1F1A, "\341\274\222"},
    {0x1F1B, "\341\274\223"},
    {0x1F1C, "\341\274\224"},
    {0x1F1D, "\341\274\225"},
    {0x1F28, "\341\274\240"},
    {0x1F29, "\341\274\241"},
    {0x1F2A, "\341\274\242"},
    {0x1F2B, "\341\274\243"},
    {0x1F2C, "\341\274\244"},
    {0x1F2D, "\341\274\245"},
    {0x1F2E, "\341\274\246"},
    {0x1F2F, "\341\274\247"},
    {0x1F38, "\341\274\260"},
    {0x1F39, "\341\274\261"},
    {0x1F3A, "\341\274\262"},
    {0x1F3B, "\341\274\263"},
    {0x1F3C, "\341\274\264"},
    {0x1F3D, "\341\274\265"},
    {0x1F3E, "\341\274\266"},
    {0x1F3F, "\341\274\267"},
    {0x1F48, "\341\275\200"},
    {0x1F49, "\341\275\201"},
    {0x1F4A, "\341\275\202"},
    {0x1F4B, "\341\275\203"},
    {0x1F4C, "\341\275\204"},
    {0x1F4D, "\341\275\205"},
    {0x1F59, "\341\275\221"},
    {0x1F5B, "\341\275\223"},
    {0x1F5D, "\341\275\225"},
    {0x1F5F, "\341\275\227"},
    {0x1F68, "\341\275\240"},
    {0x1F69, "\341\275\241"},
    {0x1F6A, "\341\275\242"},
    {0x1F6B, "\341\275\243"},
    {0x1F6C, "\341\275\244"},
    {0x1F6D, "\341\275\245"},
    {0x1F6E, "\341\275\246"},
    {0x1F6F, "\341\275\247"},
    {0x1F71, "\316\254"},
    {0x1F73, "\316\255"},
    {0x1F75, "\316\256"},
    {0x1F77, "\316\257"},
    {0x1F79, "\317\214"},
    {0x1F7B, "\317\215"},
    {0x1F7D, "\317\216"},
    {0x1F88, "\341\276\200"},
    {0x1F89, "\341\276\201"},
    {0x1F8A, "\341\276\202"},
    {0x1F8B, "\341\276\203"},
    {0x1F8C, "\341\276\204"},
    {0x1F8D, "\341\276\205"},
    {0x1F8E, "\341\276\206"},
    {0x1F8F, "\341\276\207"},
    {0x1F98, "\341\276\220"},
    {0x1F99, "\341\276\221"},
    {0x1F9A, "\341\276\222"},
    {0x1F9B, "\341\276\223"},
    {0x1F9C, "\341\276\224"},
    {0x1F9D, "\341\276\225"},
    {0x1F9E, "\341\276\226"},
    {0x1F9F, "\341\276\227"},
    {0x1FA8, "\341\276\240"},
    {0x1FA9, "\341\276\241"},
    {0x1FAA, "\341\276\242"},
    {0x1FAB, "\341\276\243"},
    {0x1FAC, "\341\276\244"},
    {0x1FAD, "\341\276\245"},
    {0x1FAE, "\341\276\246"},
    {0x1FAF, "\341\276\247"},
    {0x1FB8, "\341\276\260"},
    {0x1FB9, "\341\276\261"},
    {0x1FBA, "\341\275\260"},
    {0x1FBB, "\316\254"},
    {0x1FBC, "\341\276\263"},
    {0x1FBD, " \314\223"},
    {0x1FBE, "\316\271"},
    {0x1FBF, " \314\223"},
    {0x1FC0, " \315\202"},
    {0x1FC1, " \314\210\315\202"},
    {0x1FC8, "\341\275\262"},
    {0x1FC9, "\316\255"},
    {0x1FCA, "\341\275\264"},
    {0x1FCB, "\316\256"},
    {0x1FCC, "\341\277\203"},
    {0x1FCD, " \314\223\314\200"},
    {0x1FCE, " \314\223\314\201"},
    {0x1FCF, " \314\223\315\202"},
    {0x1FD3, "\316\220"},
    {0x1FD8, "\341\277\220"},
    {0x1FD9, "\341\277\221"},
    {0x1FDA, "\341\275\266"},
    {0x1FDB, "\316\257"},
    {0x1FDD, " \314\224\314\200"},
    {0x1FDE, " \314\224\314\201"},
    {0x1FDF, " \314\224\315\202"},
    {0x1FE3, "\316\260"},
    {0x1FE8, "\341\277\240"},
    {0x1FE9, "\341\277\241"},
    {0x1FEA, "\341\275\272"},
    {0x1FEB, "\317\215"},
    {0x1FEC, "\341\277\245"},
    {0x1FED, " \314\210\314\200"},
    {0x1FEE, " \314\210\314\201"},
    {0x1FEF, "`"},
    {0x1FF8, "\341\275\270"},
    {0x1FF9, "\317\214"},
    {0x1FFA, "\341\275\274"},
    {0x1FFB, "\317\216"},
    {0x1FFC, "\341\277\263"},
    {0x1FFD, " \314\201"},
    {0x1FFE, " \314\224"},
    {0x2000, " "},
    {0x2001, " "},
    {0x2002, " "},
    {0x2003, " "},
    {0x2004, " "},
    {0x2005, " "},
    {0x2006, " "},
    {0x2007, " "},
    {0x2008, " "},
    {0x2009, " "},
    {0x200A, " "},
    {0x2011, "\342\200\220"},
    {0x2017, " \314\263"},
    {0x2024, "."},
    {0x2025, ".."},
    {0x2026, "..."},
    {0x202F, " "},
    {0x2033, "\342\200\262\342\200\262"},
    {0x2034, "\342\200\262\342\200\262\342\200\262"},
    {0x2036, "\342\200\265\342\200\265"},
    {0x2037, "\342\200\265\342\200\265\342\200\265"},
    {0x203C, "!!"},
    {0x203E, " \314\205"},
    {0x2047, "??"},
    {0x2048, "?!"},
    {0x2049, "!?"},
    {0x2057, "\342\200\262\342\200\262\342\200\262\342\200\262"},
    {0x205F, " "},
    {0x2070, "0"},
    {0x2071, "i"},
    {0x2074, "4"},
    {0x2075, "5"},
    {0x2076, "6"},
    {0x2077, "7"},
    {0x2078, "8"},
    {0x2079, "9"},
    {0x207A, "+"},
    {0x207B, "\342\210\222"},
    {0x207C, "="},
    {0x207D, "("},
    {0x207E, ")"},
    {0x207F, "n"},
    {0x2080, "0"},
    {0x2081, "1"},
    {0x2082, "2"},
    {0x2083, "3"},
    {0x2084, "4"},
    {0x2085, "5"},
    {0x2086, "6"},
    {0x2087, "7"},
    {0x2088, "8"},
    {0x2089, "9"},
    {0x208A, "+"},
    {0x208B, "\342\210\222"},
    {0x208C, "="},
    {0x208D, "("},
    {0x208E, ")"},
    {0x2090, "a"},
    {0x2091, "e"},
    {0x2092, "o"},
    {0x2093, "x"},
    {0x2094, "\311\231"},
    {0x2095, "h"},
    {0x2096, "k"},
    {0x2097, "l"},
    {0x2098, "m"},
    {0x2099, "n"},
    {0x209A, "p"},
    {0x209B, "s"},
    {0x209C, "t"},
    {0x20A8, "rs"},
    {0x2100, "a/c"},
    {0x2101, "a/s"},
    {0x2102, "c"},
    {0x2103, "\302\260c"},
    {0x2105, "c/o"},
    {0x2106, "c/u"},
    {0x2107, "\311\233"},
    {0x2109, "\302\260f"},
    {0x210A, "g"},
    {0x210B, "h"},
    {0x210C, "h"},
    {0x210D, "h"},
    {0x210E, "h"},
    {0x210F, "\304\247"},
    {0x2110, "i"},
    {0x2111, "i"},
    {0x2112, "l"},
    {0x2113, "l"},
    {0x2115, "n"},
    {0x2116, "no"},
    {0x2119, "p"},
    {0x211A, "q"},
    {0x211B, "r"},
    {0x211C, "r"},
    {0x211D, "r"},
    {0x2120, "sm"},
    {0x2121, "tel"},
    {0x2122, "tm"},
    {0x2124, "z"},
    {0x2126, "\317\211"},
    {0x2128, "z"},
    {0x212A, "k"},
    {0x212B, "\303\245"},
    {0x212C, "b"},
    {0x212D, "c"},
    {0x212F, "e"},
    {0x2130, "e"},
    {0x2131, "f"},
    {0x2132, "\342\205\216"},
    {0x2133, "m"},
    {0x2134, "o"},
    {0x2135, "\327\220"},
    {0x2136, "\327\221"},
    {0x2137, "\327\222"},
    {0x2138, "\327\223"},
    {0x2139, "i"},
    {0x213B, "fax"},
    {0x213C, "\317\200"},
    {0x213D, "\316\263"},
    {0x213E, "\316\263"},
    {0x213F, "\317\200"},
    {0x2140, "\342\210\221"},
    {0x2145, "d"},
    {0x2146, "d"},
    {0x2147, "e"},
    {0x2148, "i"},
    {0x2149, "j"},
    {0x2150, "1\342\201\2047"},
    {0x2151, "1\342\201\2049"},
    {0x2152, "1\342\201\20410"},
    {0x2153, "1\342\201\2043"},
    {0x2154, "2\342\201\2043"},
    {0x2155, "1\342\201\2045"},
    {0x2156, "2\342\201\2045"},
    {0x2157, "3\342\201\2045"},
    {0x2158, "4\342\201\2045"},
    {0x2159, "1\342\201\2046"},
    {0x215A, "5\342\201\2046"},
    {0x215B, "1\342\201\2048"},
    {0x215C, "3\342\201\2048"},
    {0x215D, "5\342\201\2048"},
    {0x215E, "7\342\201\2048"},
    {0x215F, "1\342\201\204"},
    {0x2160, "i"},
    {0x2161, "ii"},
    {0x2162, "iii"},
    {0x2163, "iv"},
    {0x2164, "v"},
    {0x2165, "vi"},
    {0x2166, "vii"},
    {0x2167, "viii"},
    {0x2168, "ix"},
    {0x2169, "x"},
    {0x216A, "xi"},
    {0x216B, "xii"},
    {0x216C, "l"},
    {0x216D, "c"},
    {0x216E, "d"},
    {0x216F, "m"},
    {0x2170, "i"},
    {0x2171, "ii"},
    {0x2172, "iii"},
    {0x2173, "iv"},
    {0x2174, "v"},
    {0x2175, "vi"},
    {0x2176, "vii"},
    {0x2177, "viii"},
    {0x2178, "ix"},
    {0x2179, "x"},
    {0x217A, "xi"},
    {0x217B, "xii"},
    {0x217C, "l"},
    {0x217D, "c"},
    {0x217E, "d"},
    {0x217F, "m"},
    {0x2183, "\342\206\204"},
    {0x2189, "0\342\201\2043"},
    {0x222C, "\342\210\253\342\210\253"},
    {0x222D, "\342\210\253\342\210\253\342\210\253"},
    {0x222F, "\342\210\256\342\210\256"},
    {0x2230, "\342\210\256\342\210\256\342\210\256"},
    {0x2329, "\343\200\210"},
    {0x232A, "\343\200\211"},
    {0x2460, "1"},
    {0x2461, "2"},
    {0x2462, "3"},
    {0x2463, "4"},
    {0x2464, "5"},
    {0x2465, "6"},
    {0x2466, "7"},
    {0x2467, "8"},
    {0x2468, "9"},
    {0x2469, "10"},
    {0x246A, "11"},
    {0x246B, "12"},
    {0x246C, "13"},
    {0x246D, "14"},
    {0x246E, "15"},
    {0x246F, "16"},
    {0x2470, "17"},
    {0x2471, "18"},
    {0x2472, "19"},
    {0x2473, "20"},
    {0x2474, "(1)"},
    {0x2475, "(2)"},
    {0x2476, "(3)"},
    {0x2477, "(4)"},
    {0x2478, "(5)"},
    {0x2479, "(6)"},
    {0x247A, "(7)"},
    {0x247B, "(8)"},
    {0x247C, "(9)"},
    {0x247D, "(10)"},
    {0x247E, "(11)"},
    {0x247F, "(12)"},
    {0x2480, "(13)"},
    {0x2481, "(14)"},
    {0x2482, "(15)"},
    {0x2483, "(16)"},
    {0x2484, "(17)"},
    {0x2485, "(18)"},
    {0x2486, "(19)"},
    {0x2487, "(20)"},
    {0x2488, "1."},
    {0x2489, "2."},
    {0x248A, "3."},
    {0x248B, "4."},
    {0x248C, "5."},
    {0x248D, "6."},
    {0x248E, "7."},
    {0x248F, "8."},
    {0x2490, "9."},
    {0x2491, "10."},
    {0x2492, "11."},
    {0x2493, "12."},
    {0x2494, "13."},
    {0x2495, "14."},
    {0x2496, "15."},
    {0x2497, "16."},
    {0x2498, "17."},
    {0x2499, "18."},
    {0x249A, "19."},
    {0x249B, "20."},
    {0x249C, "(a)"},
    {0x249D, "(b)"},
    {0x249E, "(c)"},
    {0x249F, "(d)"},
    {0x24A0, "(e)"},
    {0x24A1, "(f)"},
    {0x24A2, "(g)"},
    {0x24A3, "(h)"},
    {0x24A4, "(i)"},
    {0x24A5, "(j)"},
    {0x24A6, "(k)"},
    {0x24A7, "(l)"},
    {0x24A8, "(m)"},
    {0x24A9, "(n)"},
    {0x24AA, "(o)"},
    {0x24AB, "(p)"},
    {0x24AC, "(q)"},
    {0x24AD, "(r)"},
    {0x24AE, "(s)"},
    {0x24AF, "(t)"},
    {0x24B0, "(u)"},
    {0x24B1, "(v)"},
    {0x24B2, "(w)"},
    {0x24B3, "(x)"},
    {0x24B4, "(y)"},
    {0x24B5, "(z)"},
    {0x24B6, "a"},
    {0x24B7, "b"},
    {0x24B8, "c"},
    {0x24B9, "d"},
    {0x24BA, "e"},
    {0x24BB, "f"},
    {0x24BC, "g"},
    {0x24BD, "h"},
    {0x24BE, "i"},
    {0x24BF, "j"},
    {0x24C0, "k"},
    {0x24C1, "l"},
    {0x24C2, "m"},
    {0x24C3, "n"},
    {0x24C4, "o"},
    {0x24C5, "p"},
    {0x24C6, "q"},
    {0x24C7, "r"},
    {0x24C8, "s"},
    {0x24C9, "t"},
    {0x24CA, "u"},
    {0x24CB, "v"},
    {0x24CC, "w"},
    {0x24CD, "x"},
    {0x24CE, "y"},
    {0x24CF, "z"},
    {0x24D0, "a"},
    {0x24D1, "b"},
    {0x24D2, "c"},
    {0x24D3, "d"},
    {0x24D4, "e"},
    {0x24D5, "f"},
    {0x24D6, "g"},
    {0x24D7, "h"},
    {0x24D8, "i"},
    {0x24D9, "j"},
    {0x24DA, "k"},
    {0x24DB, "l"},
    {0x24DC, "m"},
    {0x24DD, "n"},
    {0x24DE, "o"},
    {0x24DF, "p"},
    {0x24E0, "q"},
    {0x24E1, "r"},
    {0x24E2, "s"},
    {0x24E3, "t"},
    {0x24E4, "u"},
    {0x24E5, "v"},
    {0x24E6, "w"},
    {0x24E7, "x"},
    {0x24E8, "y"},
    {0x24E9, "z"},
    {0x24EA, "0"},
    {0x2A0C, "\342\210\253\342\210\253\342\210\253\342\210\253"},
    {0x2A74, "::="},
    {0x2A75, "=="},
    {0x2A76, "==="},
    {0x2ADC, "\342\253\235\314\270"},
    {0x2C00, "\342\260\260"},
    {0x2C01, "\342\260\261"},
    {0x2C02, "\342\260\262"},
    {0x2C03, "\342\260\263"},
    {0x2C04, "\342\260\264"},
    {0x2C05, "\342\260\265"},
    {0x2C06, "\342\260\266"},
    {0x2C07, "\342\260\267"},
    {0x2C08, "\342\260\270"},
    {0x2C09, "\342\260\271"},
    {0x2C0A, "\342\260\272"},
    {0x2C0B, "\342\260\273"},
    {0x2C0C, "\342\260\274"},
    {0x2C0D, "\342\260\275"},
    {0x2C0E, "\342\260\276"},
    {0x2C0F, "\342\260\277"},
    {0x2C10, "\342\261\200"},
    {0x2C11, "\342\261\201"},
    {0x2C12, "\342\261\202"},
    {0x2C13, "\342\261\203"},
    {0x2C14, "\342\261\204"},
    {0x2C15, "\342\261\205"},
    {0x2C16, "\342\261\206"},
    {0x2C17, "\342\261\207"},
    {0x2C18, "\342\261\210"},
    {0x2C19, "\342\261\211"},
    {0x2C1A, "\342\261\212"},
    {0x2C1B, "\342\261\213"},
    {0x2C1C, "\342\261\214"},
    {0x2C1D, "\342\261\215"},
    {0x2C1E, "\342\261\216"},
    {0x2C1F, "\342\261\217"},
    {0x2C20, "\342\261\220"},
    {0x2C21, "\342\261\221"},
    {0x2C22, "\342\261\222"},
    {0x2C23, "\342\261\223"},
    {0x2C24, "\342\261\224"},
    {0x2C25, "\342\261\225"},
    {0x2C26, "\342\261\226"},
    {0x2C27, "\342\261\227"},
    {0x2C28, "\342\261\230"},
    {0x2C29, "\342\261\231"},
    {0x2C2A, "\342\261\232"},
    {0x2C2B, "\342\261\233"},
    {0x2C2C, "\342\261\234"},
    {0x2C2D, "\342\261\235"},
    {0x2C2E, "\342\261\236"},
    {0x2C60, "\342\261\241"},
    {0x2C62, "\311\253"},
    {0x2C63, "\341\265\275"},
    {0x2C64, "\311\275"},
    {0x2C67, "\342\261\250"},
    {0x2C69, "\342\261\252"},
    {0x2C6B, "\342\261\254"},
    {0x2C6D, "\311\221"},
    {0x2C6E, "\311\261"},
    {0x2C6F, "\311\220"},
    {0x2C70, "\311\222"},
    {0x2C72, "\342\261\263"},
    {0x2C75, "\342\261\266"},
    {0x2C7C, "j"},
    {0x2C7D, "v"},
    {0x2C7E, "\310\277"},
    {0x2C7F, "\311\200"},
    {0x2C80, "\342\262\201"},
    {0x2C82, "\342\262\203"},
    {0x2C84, "\342\262\205"},
    {0x2C86, "\342\262\207"},
    {0x2C88, "\342\262\211"},
    {0x2C8A, "\342\262\213"},
    {0x2C8C, "\342\262\215"},
    {0x2C8E, "\342\262\217"},
    {0x2C90, "\342\262\221"},
    {0x2C92, "\342\262\223"},
    {0x2C94, "\342\262\225"},
    {0x2C96, "\342\262\227"},
    {0x2C98, "\342\262\231"},
    {0x2C9A, "\342\262\233"},
    {0x2C9C, "\342\262\235"},
    {0x2C9E, "\342\262\237"},
    {0x2CA0, "\342\262\241"},
    {0x2CA2, "\342\262\243"},
    {0x2CA4, "\342\262\245"},
    {0x2CA6, "\342\262\247"},
    {0x2CA8, "\342\262\251"},
    {0x2CAA, "\342\262\253"},
    {0x2CAC, "\342\262\255"},
    {0x2CAE, "\342\262\257"},
    {0x2CB0, "\342\262\261"},
    {0x2CB2, "\342\262\263"},
    {0x2CB4, "\342\262\265"},
    {0x2CB6, "\342\262\267"},
    {0x2CB8, "\342\262\271"},
    {0x2CBA, "\342\262\273"},
    {0x2CBC, "\342\262\275"},
    {0x2CBE, "\342\262\277"},
    {0x2CC0, "\342\263\201"},
    {0x2CC2, "\342\263\203"},
    {0x2CC4, "\342\263\205"},
    {0x2CC6, "\342\263\207"},
    {0x2CC8, "\342\263\211"},
    {0x2CCA, "\342\263\213"},
    {0x2CCC, "\342\263\215"},
    {0x2CCE, "\342\263\217"},
    {0x2CD0, "\342\263\221"},
    {0x2CD2, "\342\263\223"},
    {0x2CD4, "\342\263\225"},
    {0x2CD6, "\342\263\227"},
    {0x2CD8, "\342\263\231"},
    {0x2CDA, "\342\263\233"},
    {0x2CDC, "\342\263\235"},
    {0x2CDE, "\342\263\237"},
    {0x2CE0, "\342\263\241"},
    {0x2CE2, "\342\263\243"},
    {0x2CEB, "\342\263\254"},
    {0x2CED, "\342\263\256"},
    {0x2CF2, "\342\263\263"},
    {0x2D6F, "\342\265\241"},
    {0x2E9F, "\346\257\215"},
    {0x2EF3, "\351\276\237"},
    {0x2F00, "\344\270\200"},
    {0x2F01, "\344\270\250"},
    {0x2F02, "\344\270\266"},
    {0x2F03, "\344\270\277"},
    {0x2F04, "\344\271\231"},
    {0x2F05, "\344\272\205"},
    {0x2F06, "\344\272\214"},
    {0x2F07, "\344\272\240"},
    {0x2F08, "\344\272\272"},
    {0x2F09, "\345\204\277"},
    {0x2F0A, "\345\205\245"},
    {0x2F0B, "\345\205\253"},
    {0x2F0C, "\345\206\202"},
    {0x2F0D, "\345\206\226"},
    {0x2F0E, "\345\206\253"},
    {0x2F0F, "\345\207\240"},
    {0x2F10, "\345\207\265"},
    {0x2F11, "\345\210\200"},
    {0x2F12, "\345\212\233"},
    {0x2F13, "\345\213\271"},
    {0x2F14, "\345\214\225"},
    {0x2F15, "\345\214\232"},
    {0x2F16, "\345\214\270"},
    {0x2F17, "\345\215\201"},
    {0x2F18, "\345\215\234"},
    {0x2F19, "\345\215\251"},
    {0x2F1A, "\345\216\202"},
    {0x2F1B, "\345\216\266"},
    {0x2F1C, "\345\217\210"},
    {0x2F1D, "\345\217\243"},
    {0x2F1E, "\345\233\227"},
    {0x2F1F, "\345\234\237"},
    {0x2F20, "\345\243\253"},
    {0x2F21, "\345\244\202"},
    {0x2F22, "\345\244\212"},
    {0x2F23, "\345\244\225"},
    {0x2F24, "\345\244\247"},
    {0x2F25, "\345\245\263"},
    {0x2F26, "\345\255\220"},
    {0x2F27, "\345\256\200"},
    {0x2F28, "\345\257\270"},
    {0x2F29, "\345\260\217"},
    {0x2F2A, "\345\260\242"},
    {0x2F2B, "\345\260\270"},
    {0x2F2C, "\345\261\256"},
    {0x2F2D, "\345\261\261"},
    {0x2F2E, "\345\267\233"},
    {0x2F2F, "\345\267\245"},
    {0x2F30, "\345\267\261"},
    {0x2F31, "\345\267\276"},
    {0x2F32, "\345\271\262"},
    {0x2F33, "\345\271\272"},
    {0x2F34, "\345\271\277"},
    {0x2F35, "\345\273\264"},
    {0x2F36, "\345\273\276"},
    {0x2F37, "\345\274\213"},
    {0x2F38, "\345\274\223"},
    {0x2F39, "\345\275\220"},
    {0x2F3A, "\345\275\241"},
    {0x2F3B, "\345\275\263"},
    {0x2F3C, "\345\277\203"},
    {0x2F3D, "\346\210\210"},
    {0x2F3E, "\346\210\266"},
    {0x2F3F, "\346\211\213"},
    {0x2F40, "\346\224\257"},
    {0x2F41, "\346\224\264"},
    {0x2F42, "\346\226\207"},
    {0x2F43, "\346\226\227"},
    {0x2F44, "\346\226\244"},
    {0x2F45, "\346\226\271"},
    {0x2F46, "\346\227\240"},
    {0x2F47, "\346\227\245"},
    {0x2F48, "\346\233\260"},
    {0x2F49, "\346\234\210"},
    {0x2F4A, "\346\234\250"},
    {0x2F4B, "\346\254\240"},
    {0x2F4C, "\346\255\242"},
    {0x2F4D, "\346\255\271"},
    {0x2F4E, "\346\256\263"},
    {0x2F4F, "\346\257\213"},
    {0x2F50, "\346\257\224"},
    {0x2F51, "\346\257\233"},
    {0x2F52, "\346\260\217"},
    {0x2F53, "\346\260\224"},
    {0x2F54, "\346\260\264"},
    {0x2F55, "\347\201\253"},
    {0x2F56, "\347\210\252"},
    {0x2F57, "\347\210\266"},
    {0x2F58, "\347\210\273"},
    {0x2F59, "\347\210\277"},
    {0x2F5A, "\347\211\207"},
    {0x2F5B, "\347\211\231"},
    {0x2F5C, "\347\211\233"},
    {0x2F5D, "\347\212\254"},
    {0x2F5E, "\347\216\204"},
    {0x2F5F, "\347\216\211"},
    {0x2F60, "\347\223\234"},
    {0x2F61, "\347\223\246"},
    {0x2F62, "\347\224\230"},
    {0x2F63, "\347\224\237"},
    {0x2F64, "\347\224\250"},
    {0x2F65, "\347\224\260"},
    {0x2F66, "\347\226\213"},
    {0x2F67, "\347\226\222"},
    {0x2F68, "\347\231\266"},
    {0x2F69, "\347\231\275"},
    {0x2F6A, "\347\232\256"},
    {0x2F6B, "\347\232\277"},
    {0x2F6C, "\347\233\256"},
    {0x2F6D, "\347\237\233"},
    {0x2F6E, "\347\237\242"},
    {0x2F6F, "\347\237\263"},
    {0x2F70, "\347\244\272"},
    {0x2F71, "\347\246\270"},
    {0x2F72, "\347\246\276"},
    {0x2F73, "\347\251\264"},
    {0x2F74, "\347\253\213"},
    {0x2F75, "\347\253\271"},
    {0x2F76, "\347\261\263"},
    {0x2F77, "\347\263\270"},
    {0x2F78, "\347\274\266"},
    {0x2F79, "\347\275\221"},
    {0x2F7A, "\347\276\212"},
    {0x2F7B, "\347\276\275"},
    {0x2F7C, "\350\200\201"},
    {0x2F7D, "\350\200\214"},
    {0x2F7E, "\350\200\222"},
    {0x2F7F, "\350\200\263"},
    {0x2F80, "\350\201\277"},
    {0x2F81, "\350\202\211"},
    {0x2F82, "\350\207\243"},
    {0x2F83, "\350\207\252"},
    {0x2F84, "\350\207\263"},
    {0x2F85, "\350\207\274"},
    {0x2F86, "\350\210\214"},
    {0x2F87, "\350\210\233"},
    {0x2F88, "\350\210\237"},
    {0x2F89, "\350\211\256"},
    {0x2F8A, "\350\211\262"},
    {0x2F8B, "\350\211\270"},
    {0x2F8C, "\350\231\215"},
    {0x2F8D, "\350\231\253"},
    {0x2F8E, "\350\241\200"},
    {0x2F8F, "\350\241\214"},
    {0x2F90, "\350\241\243"},
    {0x2F91, "\350\245\276"},
    {0x2F92, "\350\246\213"},
    {0x2F93, "\350\247\222"},
    {0x2F94, "\350\250\200"},
    {0x2F95, "\350\260\267"},
    {0x2F96, "\350\261\206"},
    {0x2F97, "\350\261\225"},
    {0x2F98, "\350\261\270"},
    {0x2F99, "\350\262\235"},
    {0x2F9A, "\350\265\244"},
    {0x2F9B, "\350\265\260"},
    {0x2F9C, "\350\266\263"},
    {0x2F9D, "\350\272\253"},
    {0x2F9E, "\350\273\212"},
    {0x2F9F, "\350\276\233"},
    {0x2FA0, "\350\276\260"},
    {0x2FA1, "\350\276\265"},
    {0x2FA2, "\351\202\221"},
    {0x2FA3, "\351\205\211"},
    {0x2FA4, "\351\207\206"},
    {0x2FA5, "\351\207\214"},
    {0x2FA6, "\351\207\221"},
    {0x2FA7, "\351\225\267"},
    {0x2FA8, "\351\226\200"},
    {0x2FA9, "\351\230\234"},
    {0x2FAA, "\351\232\266"},
    {0x2FAB, "\351\232\271"},
    {0x2FAC, "\351\233\250"},
    {0x2FAD, "\351\235\221"},
    {0x2FAE, "\351\235\236"},
    {0x2FAF, "\351\235\242"},
    {0x2FB0, "\351\235\251"},
    {0x2FB1, "\351\237\213"},
    {0x2FB2, "\351\237\255"},
    {0x2FB3, "\351\237\263"},
    {0x2FB4, "\351\240\201"},
    {0x2FB5, "\351\242\250"},
    {0x2FB6, "\351\243\233"},
    {0x2FB7, "\351\243\237"},
    {0x2FB8, "\351\246\226"},
    {0x2FB9, "\351\246\231"},
    {0x2FBA, "\351\246\254"},
    {0x2FBB, "\351\252\250"},
    {0x2FBC, "\351\253\230"},
    {0x2FBD, "\351\253\237"},
    {0x2FBE, "\351\254\245"},
    {0x2FBF, "\351\254\257"},
    {0x2FC0, "\351\254\262"},
    {0x2FC1, "\351\254\274"},
    {0x2FC2, "\351\255\232"},
    {0x2FC3, "\351\263\245"},
    {0x2FC4, "\351\271\265"},
    {0x2FC5, "\351\271\277"},
    {0x2FC6, "\351\272\245"},
    {0x2FC7, "\351\272\273"},
    {0x2FC8, "\351\273\203"},
    {0x2FC9, "\351\273\215"},
    {0x2FCA, "\351\273\221"},
    {0x2FCB, "\351\273\271"},
    {0x2FCC, "\351\273\275"},
    {0x2FCD, "\351\274\216"},
    {0x2FCE, "\351\274\223"},
    {0x2FCF, "\351\274\240"},
    {0x2FD0, "\351\274\273"},
    {0x2FD1, "\351\275\212"},
    {0x2FD2, "\351\275\222"},
    {0x2FD3, "\351\276\215"},
    {0x2FD4, "\351\276\234"},
    {0x2FD5, "\351\276\240"},
    {0x3000, " "},
    {0x3036, "\343\200\222"},
    {0x3038, "\345\215\201"},
    {0x3039, "\345\215\204"},
    {0x303A, "\345\215\205"},
    {0x309B, " \343\202\231"},
    {0x309C, " \343\202\232"},
    {0x309F, "\343\202\210\343\202\212"},
    {0x30FF, "\343\202\263\343\203\210"},
    {0x3131, "\341\204\200"},
    {0x3132, "\341\204\201"},
    {0x3133, "\341\206\252"},
    {0x3134, "\341\204\202"},
    {0x3135, "\341\206\254"},
    {0x3136, "\341\206\255"},
    {0x3137, "\341\204\203"},
    {0x3138, "\341\204\204"},
    {0x3139, "\341\204\205"},
    {0x313A, "\341\206\260"},
    {0x313B, "\341\206\261"},
    {0x313C, "\341\206\262"},
    {0x313D, "\341\206\263"},
    {0x313E, "\341\206\264"},
    {0x313F, "\341\206\265"},
    {0x3140, "\341\204\232"},
    {0x3141, "\341\204\206"},
    {0x3142, "\341\204\207"},
    {0x3143, "\341\204\210"},
    {0x3144, "\341\204\241"},
    {0x3145, "\341\204\211"},
    {0x3146, "\341\204\212"},
    {0x3147, "\341\204\213"},
    {0x3148, "\341\204\214"},
    {0x3149, "\341\204\215"},
    {0x314A, "\341\204\216"},
    {0x314B, "\341\204\217"},
    {0x314C, "\341\204\220"},
    {0x314D, "\341\204\221"},
    {0x314E, "\341\204\222"},
    {0x314F, "\341\205\241"},
    {0x3150, "\341\205\242"},
    {0x3151, "\341\205\243"},
    {0x3152, "\341\205\244"},
    {0x3153, "\341\205\245"},
    {0x3154, "\341\205\246"},
    {0x3155, "\341\205\247"},
    {0x3156, "\341\205\250"},
    {0x3157, "\341\205\251"},
    {0x3158, "\341\205\252"},
    {0x3159, "\341\205\253"},
    {0x315A, "\341\205\254"},
    {0x315B, "\341\205\255"},
    {0x315C, "\341\205\256"},
    {0x315D, "\341\205\257"},
    {0x315E, "\341\205\260"},
    {0x315F, "\341\205\261"},
    {0x3160, "\341\205\262"},
    {0x3161, "\341\205\263"},
    {0x3162, "\341\205\264"},
    {0x3163, "\341\205\265"},
    {0x3164, "\341\205\240"},
    {0x3165, "\341\204\224"},
    {0x3166, "\341\204\225"},
    {0x3167, "\341\207\207"},
    {0x3168, "\341\207\210"},
    {0x3169, "\341\207\214"},
    {0x316A, "\341\207\216"},
    {0x316B, "\341\207\223"},
    {0x316C, "\341\207\227"},
    {0x316D, "\341\207\231"},
    {0x316E, "\341\204\234"},
    {0x316F, "\341\207\235"},
    {0x3170, "\341\207\237"},
    {0x3171, "\341\204\235"},
    {0x3172, "\341\204\236"},
    {0x3173, "\341\204\240"},
    {0x3174, "\341\204\242"},
    {0x3175, "\341\204\243"},
    {0x3176, "\341\204\247"},
    {0x3177, "\341\204\251"},
    {0x3178, "\341\204\253"},
    {0x3179, "\341\204\254"},
    {0x317A, "\341\204\255"},
    {0x317B, "\341\204\256"},
    {0x317C, "\341\204\257"},
    {0x317D, "\341\204\262"},
    {0x317E, "\341\204\266"},
    {0x317F, "\341\205\200"},
    {0x3180, "\341\205\207"},
    {0x3181, "\341\205\214"},
    {0x3182, "\341\207\261"},
    {0x3183, "\341\207\262"},
    {0x3184, "\341\205\227"},
    {0x3185, "\341\205\230"},
    {0x3186, "\341\205\231"},
    {0x3187, "\341\206\204"},
    {0x3188, "\341\206\205"},
    {0x3189, "\341\206\210"},
    {0x318A, "\341\206\221"},
    {0x318B, "\341\206\222"},
    {0x318C, "\341\206\224"},
    {0x318D, "\341\206\236"},
    {0x318E, "\341\206\241"},
    {0x3192, "\344\270\200"},
    {0x3193, "\344\272\214"},
    {0x3194, "\344\270\211"},
    {0x3195, "\345\233\233"},
    {0x3196, "\344\270\212"},
    {0x3197, "\344\270\255"},
    {0x3198, "\344\270\213"},
    {0x3199, "\347\224\262"},
    {0x319A, "\344\271\231"},
    {0x319B, "\344\270\231"},
    {0x319C, "\344\270\201"},
    {0x319D, "\345\244\251"},
    {0x319E, "\345\234\260"},
    {0x319F, "\344\272\272"},
    {0x3200, "(\341\204\200)"},
    {0x3201, "(\341\204\202)"},
    {0x3202, "(\341\204\203)"},
    {0x3203, "(\341\204\205)"},
    {0x3204, "(\341\204\206)"},
    {0x3205, "(\341\204\207)"},
    {0x3206, "(\341\204\211)"},
    {0x3207, "(\341\204\213)"},
    {0x3208, "(\341\204\214)"},
    {0x3209, "(\341\204\216)"},
    {0x320A, "(\341\204\217)"},
    {0x320B, "(\341\204\220)"},
    {0x320C, "(\341\204\221)"},
    {0x320D, "(\341\204\222)"},
    {0x320E, "(\352\260\200)"},
    {0x320F, "(\353\202\230)"},
    {0x3210, "(\353\213\244)"},
    {0x3211, "(\353\235\274)"},
    {0x3212, "(\353\247\210)"},
    {0x3213, "(\353\260\224)"},
    {0x3214, "(\354\202\254)"},
    {0x3215, "(\354\225\204)"},
    {0x3216, "(\354\236\220)"},
    {0x3217, "(\354\260\250)"},
    {0x3218, "(\354\271\264)"},
    {0x3219, "(\355\203\200)"},
    {0x321A, "(\355\214\214)"},
    {0x321B, "(\355\225\230)"},
    {0x321C, "(\354\243\274)"},
    {0x321D, "(\354\230\244\354\240\204)"},
    {0x321E, "(\354\230\244\355\233\204)"},
    {0x3220, "(\344\270\200)"},
    {0x3221, "(\344\272\214)"},
    {0x3222, "(\344\270\211)"},
    {0x3223, "(\345\233\233)"},
    {0x3224, "(\344\272\224)"},
    {0x3225, "(\345\205\255)"},
    {0x3226, "(\344\270\203)"},
    {0x3227, "(\345\205\253)"},
    {0x3228, "(\344\271\235)"},
    {0x3229, "(\345\215\201)"},
    {0x322A, "(\346\234\210)"},
    {0x322B, "(\347\201\253)"},
    {0x322C, "(\346\260\264)"},
    {0x322D, "(\346\234\250)"},
    {0x322E, "(\351\207\221)"},
    {0x322F, "(\345\234\237)"},
    {0x3230, "(\346\227\245)"},
    {0x3231, "(\346\240\252)"},
    {0x3232, "(\346\234\211)"},
    {0x3233, "(\347\244\276)"},
    {0x3234, "(\345\220\215)"},
    {0x3235, "(\347\211\271)"},
    {0x3236, "(\350\262\241)"},
    {0x3237, "(\347\245\235)"},
    {0x3238, "(\345\212\264)"},
    {0x3239, "(\344\273\243)"},
    {0x323A, "(\345\221\274)"},
    {0x323B, "(\345\255\246)"},
    {0x323C, "(\347\233\243)"},
    {0x323D, "(\344\274\201)"},
    {0x323E, "(\350\263\207)"},
    {0x323F, "(\345\215\224)"},
    {0x3240, "(\347\245\255)"},
    {0x3241, "(\344\274\221)"},
    {0x3242, "(\350\207\252)"},
    {0x3243, "(\350\207\263)"},
    {0x3244, "\345\225\217"},
    {0x3245, "\345\271\274"},
    {0x3246, "\346\226\207"},
    {0x3247, "\347\256\217"},
    {0x3250, "pte"},
    {0x3251, "21"},
    {0x3252, "22"},
    {0x3253, "23"},
    {0x3254, "24"},
    {0x3255, "25"},
    {0x3256, "26"},
    {0x3257, "27"},
    {0x3258, "28"},
    {0x3259, "29"},
    {0x325A, "30"},
    {0x325B, "31"},
    {0x325C, "32"},
    {0x325D, "33"},
    {0x325E, "34"},
    {0x325F, "35"},
    {0x3260, "\341\204\200"},
    {0x3261, "\341\204\202"},
    {0x3262, "\341\204\203"},
    {0x3263, "\341\204\205"},
    {0x3264, "\341\204\206"},
    {0x3265, "\341\204\207"},
    {0x3266, "\341\204\211"},
    {0x3267, "\341\204\213"},
    {0x3268, "\341\204\214"},
    {0x3269, "\341\204\216"},
    {0x326A, "\341\204\217"},
    {0x326B, "\341\204\220"},
    {0x326C, "\341\204\221"},
    {0x326D, "\341\204\222"},
    {0x326E, "\352\260\200"},
    {0x326F, "\353\202\230"},
    {0x3270, "\353\213\244"},
    {0x3271, "\353\235\274"},
    {0x3272, "\353\247\210"},
    {0x3273, "\353\260\224"},
    {0x3274, "\354\202\254"},
    {0x3275, "\354\225\204"},
    {0x3276, "\354\236\220"},
    {0x3277, "\354\260\250"},
    {0x3278, "\354\271\264"},
    {0x3279, "\355\203\200"},
    {0x327A, "\355\214\214"},
    {0x327B, "\355\225\230"},
    {0x327C, "\354\260\270\352\263\240"},
    {0x327D, "\354\243\274\354\235\230"},
    {0x327E, "\354\232\260"},
    {0x3280, "\344\270\200"},
    {0x3281, "\344\272\214"},
    {0x3282, "\344\270\211"},
    {0x3283, "\345\233\233"},
    {0x3284, "\344\272\224"},
    {0x3285, "\345\205\255"},
    {0x3286, "\344\270\203"},
    {0x3287, "\345\205\253"},
    {0x3288, "\344\271\235"},
    {0x3289, "\345\215\201"},
    {0x328A, "\346\234\210"},
    {0x328B, "\347\201\253"},
    {0x328C, "\346\260\264"},
    {0x328D, "\346\234\250"},
    {0x328E, "\351\207\221"},
    {0x328F, "\345\234\237"},
    {0x3290, "\346\227\245"},
    {0x3291, "\346\240\252"},
    {0x3292, "\346\234\211"},
    {0x3293, "\347\244\276"},
    {0x3294, "\345\220\215"},
    {0x3295, "\347\211\271"},
    {0x3296, "\350\262\241"},
    {0x3297, "\347\245\235"},
    {0x3298, "\345\212\264"},
    {0x3299, "\347\247\230"},
    {0x329A, "\347\224\267"},
    {0x329B, "\345\245\263"},
    {0x329C, "\351\201\251"},
    {0x329D, "\345\204\252"},
    {0x329E, "\345\215\260"},
    {0x329F, "\346\263\250"},
    {0x32A0, "\351\240\205"},
    {0x32A1, "\344\274\221"},
    {0x32A2, "\345\206\231"},
    {0x32A3, "\346\255\243"},
    {0x32A4, "\344\270\212"},
    {0x32A5, "\344\270\255"},
    {0x32A6, "\344\270\213"},
    {0x32A7, "\345\267\246"},
    {0x32A8, "\345\217\263"},
    {0x32A9, "\345\214\273"},
    {0x32AA, "\345\256\227"},
    {0x32AB, "\345\255\246"},
    {0x32AC, "\347\233\243"},
    {0x32AD, "\344\274\201"},
    {0x32AE, "\350\263\207"},
    {0x32AF, "\345\215\224"},
    {0x32B0, "\345\244\234"},
    {0x32B1, "36"},
    {0x32B2, "37"},
    {0x32B3, "38"},
    {0x32B4, "39"},
    {0x32B5, "40"},
    {0x32B6, "41"},
    {0x32B7, "42"},
    {0x32B8, "43"},
    {0x32B9, "44"},
    {0x32BA, "45"},
    {0x32BB, "46"},
    {0x32BC, "47"},
    {0x32BD, "48"},
    {0x32BE, "49"},
    {0x32BF, "50"},
    {0x32C0, "1\346\234\210"},
    {0x32C1, "2\346\234\210"},
    {0x32C2, "3\346\234\210"},
    {0x32C3, "4\346\234\210"},
    {0x32C4, "5\346\234\210"},
    {0x32C5, "6\346\234\210"},
    {0x32C6, "7\346\234\210"},
    {0x32C7, "8\346\234\210"},
    {0x32C8, "9\346\234\210"},
    {0x32C9, "10\346\234\210"},
    {0x32CA, "11\346\234\210"},
    {0x32CB, "12\346\234\210"},
    {0x32CC, "hg"},
    {0x32CD, "erg"},
    {0x32CE, "ev"},
    {0x32CF, "ltd"},
    {0x32D0, "\343\202\242"},
    {0x32D1, "\343\202\244"},
    {0x32D2, "\343\202\246"},
    {0x32D3, "\343\202\250"},
    {0x32D4, "\343\202\252"},
    {0x32D5, "\343\202\253"},
    {0x32D6, "\343\202\255"},
    {0x32D7, "\343\202\257"},
    {0x32D8, "\343\202\261"},
    {0x32D9, "\343\202\263"},
    {0x32DA, "\343\202\265"},
    {0x32DB, "\343\202\267"},
    {0x32DC, "\343\202\271"},
    {0x32DD, "\343\202\273"},
    {0x32DE, "\343\202\275"},
    {0x32DF, "\343\202\277"},
    {0x32E0, "\343\203\201"},
    {0x32E1, "\343\203\204"},
    {0x32E2, "\343\203\206"},
    {0x32E3, "\343\203\210"},
    {0x32E4, "\343\203\212"},
    {0x32E5, "\343\203\213"},
    {0x32E6, "\343\203\214"},
    {0x32E7, "\343\203\215"},
    {0x32E8, "\343\203\216"},
    {0x32E9, "\343\203\217"},
    {0x32EA, "\343\203\222"},
    {0x32EB, "\343\203\225"},
    {0x32EC, "\343\203\230"},
    {0x32ED, "\343\203\233"},
    {0x32EE, "\343\203\236"},
    {0x32EF, "\343\203\237"},
    {0x32F0, "\343\203\240"},
    {0x32F1, "\343\203\241"},
    {0x32F2, "\343\203\242"},
    {0x32F3, "\343\203\244"},
    {0x32F4, "\343\203\246"},
    {0x32F5, "\343\203\250"},
    {0x32F6, "\343\203\251"},
    {0x32F7, "\343\203\252"},
    {0x32F8, "\343\203\253"},
    {0x32F9, "\343\203\254"},
    {0x32FA, "\343\203\255"},
    {0x32FB, "\343\203\257"},
    {0x32FC, "\343\203\260"},
    {0x32FD, "\343\203\261"},
    {0x32FE, "\343\203\262"},
    {0x32FF, "\344\273\244\345\222\214"},
    {0x3300, "\343\202\242\343\203\221\343\203\274\343\203\210"},
    {0x3301, "\343\202\242\343\203\253\343\203\225\343\202\241"},
    {0x3302, "\343\202\242\343\203\263\343\203\232\343\202\242"},
    {0x3303, "\343\202\242\343\203\274\343\203\253"},
    {0x3304, "\343\202\244\343\203\213\343\203\263\343\202\260"},
    {0x3305, "\343\202\244\343\203\263\343\203\201"},
    {0x3306, "\343\202\246\343\202\251\343\203\263"},
    {0x3307, "\343\202\250\343\202\271\343\202\257\343\203\274\343\203\211"},
    {0x3308, "\343\202\250\343\203\274\343\202\253\343\203\274"},
    {0x3309, "\343\202\252\343\203\263\343\202\271"},
    {0x330A, "\343\202\252\343\203\274\343\203\240"},
    {0x330B, "\343\202\253\343\202\244\343\203\252"},
    {0x330C, "\343\202\253\343\203\251\343\203\203\343\203\210"},
    {0x330D, "\343\202\253\343\203\255\343\203\252\343\203\274"},
    {0x330E, "\343\202\254\343\203\255\343\203\263"},
    {0x330F, "\343\202\254\343\203\263\343\203\236"},
    {0x3310, "\343\202\256\343\202\254"},
    {0x3311, "\343\202\256\343\203\213\343\203\274"},
    {0x3312, "\343\202\255\343\203\245\343\203\252\343\203\274"},
    {0x3313, "\343\202\256\343\203\253\343\203\200\343\203\274"},
    {0x3314, "\343\202\255\343\203\255"},
    {0x3315, "\343\202\255\343\203\255\343\202\260\343\203\251\343\203\240"},
    {0x3316, "\343\202\255\343\203\255\343\203\241\343\203\274\343\203\210\343\203\253"},
    {0x3317, "\343\202\255\343\203\255\343\203\257\343\203\203\343\203\210"},
    {0x3318, "\343\202\260\343\203\251\343\203\240"},
    {0x3319, "\343\202\260\343\203\251\343\203\240\343\203\210\343\203\263"},
    {0x331A, "\343\202\257\343\203\253\343\202\274\343\202\244\343\203\255"},
    {0x331B, "\343\202\257\343\203\255\343\203\274\343\203\215"},
    {0x331C, "\343\202\261\343\203\274\343\202\271"},
    {0x331D, "\343\202\263\343\203\253\343\203\212"},
    {0x331E, "\343\202\263\343\203\274\343\203\235"},
    {0x331F, "\343\202\265\343\202\244\343\202\257\343\203\253"},
    {0x3320, "\343\202\265\343\203\263\343\203\201\343\203\274\343\203\240"},
    {0x3321, "\343\202\267\343\203\252\343\203\263\343\202\260"},
    {0x3322, "\343\202\273\343\203\263\343\203\201"},
    {0x3323, "\343\202\273\343\203\263\343\203\210"},
    {0x3324, "\343\203\200\343\203\274\343\202\271"},
    {0x3325, "\343\203\207\343\202\267"},
    {0x3326, "\343\203\211\343\203\253"},
    {0x3327, "\343\203\210\343\203\263"},
    {0x3328, "\343\203\212\343\203\216"},
    {0x3329, "\343\203\216\343\203\203\343\203\210"},
    {0x332A, "\343\203\217\343\202\244\343\203\204"},
    {0x332B, "\343\203\221\343\203\274\343\202\273\343\203\263\343\203\210"},
    {0x332C, "\343\203\221\343\203\274\343\203\204"},
    {0x332D, "\343\203\220\343\203\274\343\203\254\343\203\253"},
    {0x332E, "\343\203\224\343\202\242\343\202\271\343\203\210\343\203\253"},
    {0x332F, "\343\203\224\343\202\257\343\203\253"},
    {0x3330, "\343\203\224\343\202\263"},
    {0x3331, "\343\203\223\343\203\253"},
    {0x3332, "\343\203\225\343\202\241\343\203\251\343\203\203\343\203\211"},
    {0x3333, "\343\203\225\343\202\243\343\203\274\343\203\210"},
    {0x3334, "\343\203\226\343\203\203\343\202\267\343\202\247\343\203\253"},
    {0x3335, "\343\203\225\343\203\251\343\203\263"},
    {0x3336, "\343\203\230\343\202\257\343\202\277\343\203\274\343\203\253"},
    {0x3337, "\343\203\232\343\202\275"},
    {0x3338, "\343\203\232\343\203\213\343\203\222"},
    {0x3339, "\343\203\230\343\203\253\343\203\204"},
    {0x333A, "\343\203\232\343\203\263\343\202\271"},
    {0x333B, "\343\203\232\343\203\274\343\202\270"},
    {0x333C, "\343\203\231\343\203\274\343\202\277"},
    {0x333D, "\343\203\235\343\202\244\343\203\263\343\203\210"},
    {0x333E, "\343\203\234\343\203\253\343\203\210"},
    {0x333F, "\343\203\233\343\203\263"},
    {0x3340, "\343\203\235\343\203\263\343\203\211"},
    {0x3341, "\343\203\233\343\203\274\343\203\253"},
    {0x3342, "\343\203\233\343\203\274\343\203\263"},
    {0x3343, "\343\203\236\343\202\244\343\202\257\343\203\255"},
    {0x3344, "\343\203\236\343\202\244\343\203\253"},
    {0x3345, "\343\203\236\343\203\203\343\203\217"},
    {0x3346, "\343\203\236\343\203\253\343\202\257"},
    {0x3347, "\343\203\236\343\203\263\343\202\267\343\203\247\343\203\263"},
    {0x3348, "\343\203\237\343\202\257\343\203\255\343\203\263"},
    {0x3349, "\343\203\237\343\203\252"},
    {0x334A, "\343\203\237\343\203\252\343\203\220\343\203\274\343\203\253"},
    {0x334B, "\343\203\241\343\202\254"},
    {0x334C, "\343\203\241\343\202\254\343\203\210\343\203\263"},
    {0x334D, "\343\203\241\343\203\274\343\203\210\343\203\253"},
    {0x334E, "\343\203\244\343\203\274\343\203\211"},
    {0x334F, "\343\203\244\343\203\274\343\203\253"},
    {0x3350, "\343\203\246\343\202\242\343\203\263"},
    {0x3351, "\343\203\252\343\203\203\343\203\210\343\203\253"},
    {0x3352, "\343\203\252\343\203\251"},
    {0x3353, "\343\203\253\343\203\224\343\203\274"},
    {0x3354, "\343\203\253\343\203\274\343\203\226\343\203\253"},
    {0x3355, "\343\203\254\343\203\240"},
    {0x3356, "\343\203\254\343\203\263\343\203\210\343\202\262\343\203\263"},
    {0x3357, "\343\203\257\343\203\203\343\203\210"},
    {0x3358, "0\347\202\271"},
    {0x3359, "1\347\202\271"},
    {0x335A, "2\347\202\271"},
    {0x335B, "3\347\202\271"},
    {0x335C, "4\347\202\271"},
    {0x335D, "5\347\202\271"},
    {0x335E, "6\347\202\271"},
    {0x335F, "7\347\202\271"},
    {0x3360, "8\347\202\271"},
    {0x3361, "9\347\202\271"},
    {0x3362, "10\347\202\271"},
    {0x3363, "11\347\202\271"},
    {0x3364, "12\347\202\271"},
    {0x3365, "13\347\202\271"},
    {0x3366, "14\347\202\271"},
    {0x3367, "15\347\202\271"},
    {0x3368, "16\347\202\271"},
    {0x3369, "17\347\202\271"},
    {0x336A, "18\347\202\271"},
    {0x336B, "19\347\202\271"},
    {0x336C, "20\347\202\271"},
    {0x336D, "21\347\202\271"},
    {0x336E, "22\347\202\271"},
    {0x336F, "23\347\202\271"},
    {0x3370, "24\347\202\271"},
    {0x3371, "hpa"},
    {0x3372, "da"},
    {0x3373, "au"},
    {0x3374, "bar"},
    {0x3375, "ov"},
    {0x3376, "pc"},
    {0x3377, "dm"},
    {0x3378, "dm2"},
    {0x3379, "dm3"},
    {0x337A, "iu"},
    {0x337B, "\345\271\263\346\210\220"},
    {0x337C, "\346\230\255\345\222\214"},
    {0x337D, "\345\244\247\346\255\243"},
    {0x337E, "\346\230\216\346\262\273"},
    {0x337F, "\346\240\252\345\274\217\344\274\232\347\244\276"},
    {0x3380, "pa"},
    {0x3381, "na"},
    {0x3382, "\316\274a"},
    {0x3383, "ma"},
    {0x3384, "ka"},
    {0x3385, "kb"},
    {0x3386, "mb"},
    {0x3387, "gb"},
    {0x3388, "cal"},
    {0x3389, "kcal"},
    {0x338A, "pf"},
    {0x338B, "nf"},
    {0x338C, "\316\274f"},
    {0x338D, "\316\274g"},
    {0x338E, "mg"},
    {0x338F, "kg"},
    {0x3390, "hz"},
    {0x3391, "khz"},
    {0x3392, "mhz"},
    {0x3393, "ghz"},
    {0x3394, "thz"},
    {0x3395, "\316\274l"},
    {0x3396, "ml"},
    {0x3397, "dl"},
    {0x3398, "kl"},
    {0x3399, "fm"},
    {0x339A, "nm"},
    {0x339B, "\316\274m"},
    {0x339C, "mm"},
    {0x339D, "cm"},
    {0x339E, "km"},
    {0x339F, "mm2"},
    {0x33A0, "cm2"},
    {0x33A1, "m2"},
    {0x33A2, "km2"},
    {0x33A3, "mm3"},
    {0x33A4, "cm3"},
    {0x33A5, "m3"},
    {0x33A6, "km3"},
    {0x33A7, "m\342\210\225s"},
    {0x33A8, "m\342\210\225s2"},
    {0x33A9, "pa"},
    {0x33AA, "kpa"},
    {0x33AB, "mpa"},
    {0x33AC, "gpa"},
    {0x33AD, "rad"},
    {0x33AE, "rad\342\210\225s"},
    {0x33AF, "rad\342\210\225s2"},
    {0x33B0, "ps"},
    {0x33B1, "ns"},
    {0x33B2, "\316\274s"},
    {0x33B3, "ms"},
    {0x33B4, "pv"},
    {0x33B5, "nv"},
    {0x33B6, "\316\274v"},
    {0x33B7, "mv"},
    {0x33B8, "kv"},
    {0x33B9, "mv"},
    {0x33BA, "pw"},
    {0x33BB, "nw"},
    {0x33BC, "\316\274w"},
    {0x33BD, "mw"},
    {0x33BE, "kw"},
    {0x33BF, "mw"},
    {0x33C0, "k\317\211"},
    {0x33C1, "m\317\211"},
    {0x33C2, "a.m."},
    {0x33C3, "bq"},
    {0x33C4, "cc"},
    {0x33C5, "cd"},
    {0x33C6, "c\342\210\225kg"},
    {0x33C7, "co."},
    {0x33C8, "db"},
    {0x33C9, "gy"},
    {0x33CA, "ha"},
    {0x33CB, "hp"},
    {0x33CC, "in"},
    {0x33CD, "kk"},
    {0x33CE, "km"},
    {0x33CF, "kt"},
    {0x33D0, "lm"},
    {0x33D1, "ln"},
    {0x33D2, "log"},
    {0x33D3, "lx"},
    {0x33D4, "mb"},
    {0x33D5, "mil"},
    {0x33D6, "mol"},
    {0x33D7, "ph"},
    {0x33D8, "p.m."},
    {0x33D9, "ppm"},
    {0x33DA, "pr"},
    {0x33DB, "sr"},
    {0x33DC, "sv"},
    {0x33DD, "wb"},
    {0x33DE, "v\342\210\225m"},
    {0x33DF, "a\342\210\225m"},
    {0x33E0, "1\346\227\245"},
    {0x33E1, "2\346\227\245"},
    {0x33E2, "3\346\227\245"},
    {0x33E3, "4\346\227\245"},
    {0x33E4, "5\346\227\245"},
    {0x33E5, "6\346\227\245"},
    {0x33E6, "7\346\227\245"},
    {0x33E7, "8\346\227\245"},
    {0x33E8, "9\346\227\245"},
    {0x33E9, "10\346\227\245"},
    {0x33EA, "11\346\227\245"},
    {0x33EB, "12\346\227\245"},
    {0x33EC, "13\346\227\245"},
    {0x33ED, "14\346\227\245"},
    {0x33EE, "15\346\227\245"},
    {0x33EF, "16\346\227\245"},
    {0x33F0, "17\346\227\245"},
    {0x33F1, "18\346\227\245"},
    {0x33F2, "19\346\227\245"},
    {0x33F3, "20\346\227\245"},
    {0x33F4, "21\346\227\245"},
    {0x33F5, "22\346\227\245"},
    {0x33F6, "23\346\227\245"},
    {0x33F7, "24\346\227\245"},
    {0x33F8, "25\346\227\245"},
    {0x33F9, "26\346\227\245"},
    {0x33FA, "27\346\227\245"},
    {0x33FB, "28\346\227\245"},
    {0x33FC, "29\346\227\245"},
    {0x33FD, "30\346\227\245"},
    {0x33FE, "31\346\227\245"},
    {0x33FF, "gal"},
    {0xA640, "\352\231\201"},
    {0xA642, "\352\231\203"},
    {0xA644, "\352\231\205"},
    {0xA646, "\352\231\207"},
    {0xA648, "\352\231\211"},
    {0xA64A, "\352\231\213"},
    {0xA64C, "\352\231\215"},
    {0xA64E, "\352\231\217"},
    {0xA650, "\352\231\221"},
    {0xA652, "\352\231\223"},
    {0xA654, "\352\231\225"},
    {0xA656, "\352\231\227"},
    {0xA658, "\352\231\231"},
    {0xA65A, "\352\231\233"},
    {0xA65C, "\352\231\235"},
    {0xA65E, "\352\231\237"},
    {0xA660, "\352\231\241"},
    {0xA662, "\352\231\243"},
    {0xA664, "\352\231\245"},
    {0xA666, "\352\231\247"},
    {0xA668, "\352\231\251"},
    {0xA66A, "\352\231\253"},
    {0xA66C, "\352\231\255"},
    {0xA680, "\352\232\201"},
    {0xA682, "\352\232\203"},
    {0xA684, "\352\232\205"},
    {0xA686, "\352\232\207"},
    {0xA688, "\352\232\211"},
    {0xA68A, "\352\232\213"},
    {0xA68C, "\352\232\215"},
    {0xA68E, "\352\232\217"},
    {0xA690, "\352\232\221"},
    {0xA692, "\352\232\223"},
    {0xA694, "\352\232\225"},
    {0xA696, "\352\232\227"},
    {0xA698, "\352\232\231"},
    {0xA69A, "\352\232\233"},
    {0xA69C, "\321\212"},
    {0xA69D, "\321\214"},
    {0xA722, "\352\234\243"},
    {0xA724, "\352\234\245"},
    {0xA726, "\352\234\247"},
    {0xA728, "\352\234\251"},
    {0xA72A, "\352\234\253"},
    {0xA72C, "\352\234\255"},
    {0xA72E, "\352\234\257"},
    {0xA732, "\352\234\263"},
    {0xA734, "\352\234\265"},
    {0xA736, "\352\234\267"},
    {0xA738, "\352\234\271"},
    {0xA73A, "\352\234\273"},
    {0xA73C, "\352\234\275"},
    {0xA73E, "\352\234\277"},
    {0xA740, "\352\235\201"},
    {0xA742, "\352\235\203"},
    {0xA744, "\352\235\205"},
    {0xA746, "\352\235\207"},
    {0xA748, "\352\235\211"},
    {0xA74A, "\352\235\213"},
    {0xA74C, "\352\235\215"},
    {0xA74E, "\352\235\217"},
    {0xA750, "\352\235\221"},
    {0xA752, "\352\235\223"},
    {0xA754, "\352\235\225"},
    {0xA756, "\352\235\227"},
    {0xA758, "\352\235\231"},
    {0xA75A, "\352\235\233"},
    {0xA75C, "\352\235\235"},
    {0xA75E, "\352\235\237"},
    {0xA760, "\352\235\241"},
    {0xA762, "\352\235\243"},
    {0xA764, "\352\235\245"},
    {0xA766, "\352\235\247"},
    {0xA768, "\352\235\251"},
    {0xA76A, "\352\235\253"},
    {0xA76C, "\352\235\255"},
    {0xA76E, "\352\235\257"},
    {0xA770, "\352\235\257"},
    {0xA779, "\352\235\272"},
    {0xA77B, "\352\235\274"},
    {0xA77D, "\341\265\271"},
    {0xA77E, "\352\235\277"},
    {0xA780, "\352\236\201"},
    {0xA782, "\352\236\203"},
    {0xA784, "\352\236\205"},
    {0xA786, "\352\236\207"},
    {0xA78B, "\352\236\214"},
    {0xA78D, "\311\245"},
    {0xA790, "\352\236\221"},
    {0xA792, "\352\236\223"},
    {0xA796, "\352\236\227"},
    {0xA798, "\352\236\231"},
    {0xA79A, "\352\236\233"},
    {0xA79C, "\352\236\235"},
    {0xA79E, "\352\236\237"},
    {0xA7A0, "\352\236\241"},
    {0xA7A2, "\352\236\243"},
    {0xA7A4, "\352\236\245"},
    {0xA7A6, "\352\236\247"},
    {0xA7A8, "\352\236\251"},
    {0xA7AA, "\311\246"},
    {0xA7AB, "\311\234"},
    {0xA7AC, "\311\241"},
    {0xA7AD, "\311\254"},
    {0xA7AE, "\311\252"},
    {0xA7B0, "\312\236"},
    {0xA7B1, "\312\207"},
    {0xA7B2, "\312\235"},
    {0xA7B3, "\352\255\223"},
    {0xA7B4, "\352\236\265"},
    {0xA7B6, "\352\236\267"},
    {0xA7B8, "\352\236\271"},
    {0xA7BA, "\352\236\273"},
    {0xA7BC, "\352\236\275"},
    {0xA7BE, "\352\236\277"},
    {0xA7C2, "\352\237\203"},
    {0xA7C4, "\352\236\224"},
    {0xA7C5, "\312\202"},
    {0xA7C6, "\341\266\216"},
    {0xA7C7, "\352\237\210"},
    {0xA7C9, "\352\237\212"},
    {0xA7F5, "\352\237\266"},
    {0xA7F8, "\304\247"},
    {0xA7F9, "\305\223"},
    {0xAB5C, "\352\234\247"},
    {0xAB5D, "\352\254\267"},
    {0xAB5E, "\311\253"},
    {0xAB5F, "\352\255\222"},
    {0xAB69, "\312\215"},
    {0xF900, "\350\261\210"},
    {0xF901, "\346\233\264"},
    {0xF902, "\350\273\212"},
    {0xF903, "\350\263\210"},
    {0xF904, "\346\273\221"},
    {0xF905, "\344\270\262"},
    {0xF906, "\345\217\245"},
    {0xF907, "\351\276\234"},
    {0xF908, "\351\276\234"},
    {0xF909, "\345\245\221"},
    {0xF90A, "\351\207\221"},
    {0xF90B, "\345\226\207"},
    {0xF90C, "\345\245\210"},
    {0xF90D, "\346\207\266"},
    {0xF90E, "\347\231\251"},
    {0xF90F, "\347\276\205"},
    {0xF910, "\350\230\277"},
    {0xF911, "\350\236\272"},
    {0xF912, "\350\243\270"},
    {0xF913, "\351\202\217"},
    {0xF914, "\346\250\202"},
    {0xF915, "\346\264\233"},
    {0xF916, "\347\203\231"},
    {0xF917, "\347\217\236"},
    {0xF918, "\350\220\275"},
    {0xF919, "\351\205\252"},
    {0xF91A, "\351\247\261"},
    {0xF91B, "\344\272\202"},
    {0xF91C, "\345\215\265"},
    {0xF91D, "\346\254\204"},
    {0xF91E, "\347\210\233"},
    {0xF91F, "\350\230\255"},
    {0xF920, "\351\270\236"},
    {0xF921, "\345\265\220"},
    {0xF922, "\346\277\253"},
    {0xF923, "\350\227\215"},
    {0xF924, "\350\245\244"},
    {0xF925, "\346\213\211"},
    {0xF926, "\350\207\230"},
    {0xF927, "\350\240\237"},
    {0xF928, "\345\273\212"},
    {0xF929, "\346\234\227"},
    {0xF92A, "\346\265\252"},
    {0xF92B, "\347\213\274"},
    {0xF92C, "\351\203\216"},
    {0xF92D, "\344\276\206"},
    {0xF92E, "\345\206\267"},
    {0xF92F, "\345\213\236"},
    {0xF930, "\346\223\204"},
    {0xF931, "\346\253\223"},
    {0xF932, "\347\210\220"},
    {0xF933, "\347\233\247"},
    {0xF934, "\350\200\201"},
    {0xF935, "\350\230\206"},
    {0xF936, "\350\231\234"},
    {0xF937, "\350\267\257"},
    {0xF938, "\351\234\262"},
    {0xF939, "\351\255\257"},
    {0xF93A, "\351\267\272"},
    {0xF93B, "\347\242\214"},
    {0xF93C, "\347\245\277"},
    {0xF93D, "\347\266\240"},
    {0xF93E, "\350\217\211"},
    {0xF93F, "\351\214\204"},
    {0xF940, "\351\271\277"},
    {0xF941, "\350\253\226"},
    {0xF942, "\345\243\237"},
    {0xF943, "\345\274\204"},
    {0xF944, "\347\261\240"},
    {0xF945, "\350\201\276"},
    {0xF946, "\347\211\242"},
    {0xF947, "\347\243\212"},
    {0xF948, "\350\263\202"},
    {0xF949, "\351\233\267"},
    {0xF94A, "\345\243\230"},
    {0xF94B, "\345\261\242"},
    {0xF94C, "\346\250\223"},
    {0xF94D, "\346\267\232"},
    {0xF94E, "\346\274\217"},
    {0xF94F, "\347\264\257"},
    {0xF950, "\347\270\267"},
    {0xF951, "\351\231\213"},
    {0xF952, "\345\213\222"},
    {0xF953, "\350\202\213"},
    {0xF954, "\345\207\234"},
    {0xF955, "\345\207\214"},
    {0xF956, "\347\250\234"},
    {0xF957, "\347\266\276"},
    {0xF958, "\350\217\261"},
    {0xF959, "\351\231\265"},
    {0xF95A, "\350\256\200"},
    {0xF95B, "\346\213\217"},
    {0xF95C, "\346\250\202"},
    {0xF95D, "\350\253\276"},
    {0xF95E, "\344\270\271"},
    {0xF95F, "\345\257\247"},
    {0xF960, "\346\200\222"},
    {0xF961, "\347\216\207"},
    {0xF962, "\347\225\260"},
    {0xF963, "\345\214\227"},
    {0xF964, "\347\243\273"},
    {0xF965, "\344\276\277"},
    {0xF966, "\345\276\251"},
    {0xF967, "\344\270\215"},
    {0xF968, "\346\263\214"},
    {0xF969, "\346\225\270"},
    {0xF96A, "\347\264\242"},
    {0xF96B, "\345\217\203"},
    {0xF96C, "\345\241\236"},
    {0xF96D, "\347\234\201"},
    {0xF96E, "\350\221\211"},
    {0xF96F, "\350\252\252"},
    {0xF970, "\346\256\272"},
    {0xF971, "\350\276\260"},
    {0xF972, "\346\262\210"},
    {0xF973, "\346\213\276"},
    {0xF974, "\350\213\245"},
    {0xF975, "\346\216\240"},
    {0xF976, "\347\225\245"},
    {0xF977, "\344\272\256"},
    {0xF978, "\345\205\251"},
    {0xF979, "\345\207\211"},
    {0xF97A, "\346\242\201"},
    {0xF97B, "\347\263\247"},
    {0xF97C, "\350\211\257"},
    {0xF97D, "\350\253\222"},
    {0xF97E, "\351\207\217"},
    {0xF97F, "\345\213\265"},
    {0xF980, "\345\221\202"},
    {0xF981, "\345\245\263"},
    {0xF982, "\345\273\254"},
    {0xF983, "\346\227\205"},
    {0xF984, "\346\277\276"},
    {0xF985, "\347\244\252"},
    {0xF986, "\351\226\255"},
    {0xF987, "\351\251\252"},
    {0xF988, "\351\272\227"},
    {0xF989, "\351\273\216"},
    {0xF98A, "\345\212\233"},
    {0xF98B, "\346\233\206"},
    {0xF98C, "\346\255\267"},
    {0xF98D, "\350\275\242"},
    {0xF98E, "\345\271\264"},
    {0xF98F, "\346\206\220"},
    {0xF990, "\346\210\200"},
    {0xF991, "\346\222\232"},
    {0xF992, "\346\274\243"},
    {0xF993, "\347\205\211"},
    {0xF994, "\347\222\211"},
    {0xF995, "\347\247\212"},
    {0xF996, "\347\267\264"},
    {0xF997, "\350\201\257"},
    {0xF998, "\350\274\246"},
    {0xF999, "\350\223\256"},
    {0xF99A, "\351\200\243"},
    {0xF99B, "\351\215\212"},
    {0xF99C, "\345\210\227"},
    {0xF99D, "\345\212\243"},
    {0xF99E, "\345\222\275"},
    {0xF99F, "\347\203\210"},
    {0xF9A0, "\350\243\202"},
    {0xF9A1, "\350\252\252"},
    {0xF9A2, "\345\273\211"},
    {0xF9A3, "\345\277\265"},
    {0xF9A4, "\346\215\273"},
    {0xF9A5, "\346\256\256"},
    {0xF9A6, "\347\260\276"},
    {0xF9A7, "\347\215\265"},
    {0xF9A8, "\344\273\244"},
    {0xF9A9, "\345\233\271"},
    {0xF9AA, "\345\257\247"},
    {0xF9AB, "\345\266\272"},
    {0xF9AC, "\346\200\234"},
    {0xF9AD, "\347\216\262"},
    {0xF9AE, "\347\221\251"},
    {0xF9AF, "\347\276\232"},
    {0xF9B0, "\350\201\206"},
    {0xF9B1, "\351\210\264"},
    {0xF9B2, "\351\233\266"},
    {0xF9B3, "\351\235\210"},
    {0xF9B4, "\351\240\230"},
    {0xF9B5, "\344\276\213"},
    {0xF9B6, "\347\246\256"},
    {0xF9B7, "\351\206\264"},
    {0xF9B8, "\351\232\270"},
    {0xF9B9, "\346\203\241"},
    {0xF9BA, "\344\272\206"},
    {0xF9BB, "\345\203\232"},
    {0xF9BC, "\345\257\256"},
    {0xF9BD, "\345\260\277"},
    {0xF9BE, "\346\226\231"},
    {0xF9BF, "\346\250\202"},
    {0xF9C0, "\347\207\216"},
    {0xF9C1, "\347\231\202"},
    {0xF9C2, "\350\223\274"},
    {0xF9C3, "\351\201\274"},
    {0xF9C4, "\351\276\215"},
    {0xF9C5, "\346\232\210"},
    {0xF9C6, "\351\230\256"},
    {0xF9C7, "\345\212\211"},
    {0xF9C8, "\346\235\273"},
    {0xF9C9, "\346\237\263"},
    {0xF9CA, "\346\265\201"},
    {0xF9CB, "\346\272\234"},
    {0xF9CC, "\347\220\211"},
    {0xF9CD, "\347\225\231"},
    {0xF9CE, "\347\241\253"},
    {0xF9CF, "\347\264\220"},
    {0xF9D0, "\351\241\236"},
    {0xF9D1, "\345\205\255"},
    {0xF9D2, "\346\210\256"},
    {0xF9D3, "\351\231\270"},
    {0xF9D4, "\345\200\253"},
    {0xF9D5, "\345\264\231"},
    {0xF9D6, "\346\267\252"},
    {0xF9D7, "\350\274\252"},
    {0xF9D8, "\345\276\213"},
    {0xF9D9, "\346\205\204"},
    {0xF9DA, "\346\240\227"},
    {0xF9DB, "\347\216\207"},
    {0xF9DC, "\351\232\206"},
    {0xF9DD, "\345\210\251"},
    {0xF9DE, "\345\220\217"},
    {0xF9DF, "\345\261\245"},
    {0xF9E0, "\346\230\223"},
    {0xF9E1, "\346\235\216"},
    {0xF9E2, "\346\242\250"},
    {0xF9E3, "\346\263\245"},
    {0xF9E4, "\347\220\206"},
    {0xF9E5, "\347\227\242"},
    {0xF9E6, "\347\275\271"},
    {0xF9E7, "\350\243\217"},
    {0xF9E8, "\350\243\241"},
    {0xF9E9, "\351\207\214"},
    {0xF9EA, "\351\233\242"},
    {0xF9EB, "\345\214\277"},
    {0xF9EC, "\346\272\272"},
    {0xF9ED, "\345\220\235"},
    {0xF9EE, "\347\207\220"},
    {0xF9EF, "\347\222\230"},
    {0xF9F0, "\350\227\272"},
    {0xF9F1, "\351\232\243"},
    {0xF9F2, "\351\261\227"},
    {0xF9F3, "\351\272\237"},
    {0xF9F4, "\346\236\227"},
    {0xF9F5, "\346\267\213"},
    {0xF9F6, "\350\207\250"},
    {0xF9F7, "\347\253\213"},
    {0xF9F8, "\347\254\240"},
    {0xF9F9, "\347\262\222"},
    {0xF9FA, "\347\213\200"},
    {0xF9FB, "\347\202\231"},
    {0xF9FC, "\350\255\230"},
    {0xF9FD, "\344\273\200"},
    {0xF9FE, "\350\214\266"},
    {0xF9FF, "\345\210\272"},
    {0xFA00, "\345\210\207"},
    {0xFA01, "\345\272\246"},
    {0xFA02, "\346\213\223"},
    {0xFA03, "\347\263\226"},
    {0xFA04, "\345\256\205"},
    {0xFA05, "\346\264\236"},
    {0xFA06, "\346\232\264"},
    {0xFA07, "\350\274\273"},
    {0xFA08, "\350\241\214"},
    {0xFA09, "\351\231\215"},
    {0xFA0A, "\350\246\213"},
    {0xFA0B, "\345\273\223"},
    {0xFA0C, "\345\205\200"},
    {0xFA0D, "\345\227\200"},
    {0xFA10, "\345\241\232"},
    {0xFA12, "\346\231\264"},
    {0xFA15, "\345\207\236"},
    {0xFA16, "\347\214\252"},
    {0xFA17, "\347\233\212"},
    {0xFA18, "\347\244\274"},
    {0xFA19, "\347\245\236"},
    {0xFA1A, "\347\245\245"},
    {0xFA1B, "\347\246\217"},
    {0xFA1C, "\351\235\226"},
    {0xFA1D, "\347\262\276"},
    {0xFA1E, "\347\276\275"},
    {0xFA20, "\350\230\222"},
    {0xFA22, "\350\253\270"},
    {0xFA25, "\351\200\270"},
    {0xFA26, "\351\203\275"},
    {0xFA2A, "\351\243\257"},
    {0xFA2B, "\351\243\274"},
    {0xFA2C, "\351\244\250"},
    {0xFA2D, "\351\266\264"},
    {0xFA2E, "\351\203\236"},
    {0xFA2F, "\351\232\267"},
    {0xFA30, "\344\276\256"},
    {0xFA31, "\345\203\247"},
    {0xFA32, "\345\205\215"},
    {0xFA33, "\345\213\211"},
    {0xFA34, "\345\213\244"},
    {0xFA35, "\345\215\221"},
    {0xFA36, "\345\226\235"},
    {0xFA37, "\345\230\206"},
    {0xFA38, "\345\231\250"},
    {0xFA39, "\345\241\200"},
    {0xFA3A, "\345\242\250"},
    {0xFA3B, "\345\261\244"},
    {0xFA3C, "\345\261\256"},
    {0xFA3D, "\346\202\224"},
    {0xFA3E, "\346\205\250"},
    {0xFA3F, "\346\206\216"},
    {0xFA40, "\346\207\262"},
    {0xFA41, "\346\225\217"},
    {0xFA42, "\346\227\242"},
    {0xFA43, "\346\232\221"},
    {0xFA44, "\346\242\205"},
    {0xFA45, "\346\265\267"},
    {0xFA46, "\346\270\232"},
    {0xFA47, "\346\274\242"},
    {0xFA48, "\347\205\256"},
    {0xFA49, "\347\210\253"},
    {0xFA4A, "\347\220\242"},
    {0xFA4B, "\347\242\221"},
    {0xFA4C, "\347\244\276"},
    {0xFA4D, "\347\245\211"},
    {0xFA4E, "\347\245\210"},
    {0xFA4F, "\347\245\220"},
    {0xFA50, "\347\245\226"},
    {0xFA51, "\347\245\235"},
    {0xFA52, "\347\246\215"},
    {0xFA53, "\347\246\216"},
    {0xFA54, "\347\251\200"},
    {0xFA55, "\347\252\201"},
    {0xFA56, "\347\257\200"},
    {0xFA57, "\347\267\264"},
    {0xFA58, "\347\270\211"},
    {0xFA59, "\347\271\201"},
    {0xFA5A, "\347\275\262"},
    {0xFA5B, "\350\200\205"},
    {0xFA5C, "\350\207\255"},
    {0xFA5D, "\350\211\271"},
    {0xFA5E, "\350\211\271"},
    {0xFA5F, "\350\221\227"},
    {0xFA60, "\350\244\220"},
    {0xFA61, "\350\246\226"},
    {0xFA62, "\350\254\201"},
    {0xFA63, "\350\254\271"},
    {0xFA64, "\350\263\223"},
    {0xFA65, "\350\264\210"},
    {0xFA66, "\350\276\266"},
    {0xFA67, "\351\200\270"},
    {0xFA68, "\351\233\243"},
    {0xFA69, "\351\237\277"},
    {0xFA6A, "\351\240\273"},
    {0xFA6B, "\346\201\265"},
    {0xFA6C, "\360\244\213\256"},
    {0xFA6D, "\350\210\230"},
    {0xFA70, "\344\270\246"},
    {0xFA71, "\345\206\265"},
    {0xFA72, "\345\205\250"},
    {0xFA73, "\344\276\200"},
    {0xFA74, "\345\205\205"},
    {0xFA75, "\345\206\200"},
    {0xFA76, "\345\213\207"},
    {0xFA77, "\345\213\272"},
    {0xFA78, "\345\226\235"},
    {0xFA79, "\345\225\225"},
    {0xFA7A, "\345\226\231"},
    {0xFA7B, "\345\227\242"},
    {0xFA7C, "\345\241\232"},
    {0xFA7D, "\345\242\263"},
    {0xFA7E, "\345\245\204"},
    {0xFA7F, "\345\245\224"},
    {0xFA80, "\345\251\242"},
    {0xFA81, "\345\254\250"},
    {0xFA82, "\345\273\222"},
    {0xFA83, "\345\273\231"},
    {0xFA84, "\345\275\251"},
    {0xFA85, "\345\276\255"},
    {0xFA86, "\346\203\230"},
    {0xFA87, "\346\205\216"},
    {0xFA88, "\346\204\210"},
    {0xFA89, "\346\206\216"},
    {0xFA8A, "\346\205\240"},
    {0xFA8B, "\346\207\262"},
    {0xFA8C, "\346\210\264"},
    {0xFA8D, "\346\217\204"},
    {0xFA8E, "\346\220\234"},
    {0xFA8F, "\346\221\222"},
    {0xFA90, "\346\225\226"},
    {0xFA91, "\346\231\264"},
    {0xFA92, "\346\234\227"},
    {0xFA93, "\346\234\233"},
    {0xFA94, "\346\235\226"},
    {0xFA95, "\346\255\271"},
    {0xFA96, "\346\256\272"},
    {0xFA97, "\346\265\201"},
    {0xFA98, "\346\273\233"},
    {0xFA99, "\346\273\213"},
    {0xFA9A, "\346\274\242"},
    {0xFA9B, "\347\200\236"},
    {0xFA9C, "\347\205\256"},
    {0xFA9D, "\347\236\247"},
    {0xFA9E, "\347\210\265"},
    {0xFA9F, "\347\212\257"},
    {0xFAA0, "\347\214\252"},
    {0xFAA1, "\347\221\261"},
    {0xFAA2, "\347\224\206"},
    {0xFAA3, "\347\224\273"},
    {0xFAA4, "\347\230\235"},
    {0xFAA5, "\347\230\237"},
    {0xFAA6, "\347\233\212"},
    {0xFAA7, "\347\233\233"},
    {0xFAA8, "\347\233\264"},
    {0xFAA9, "\347\235\212"},
    {0xFAAA, "\347\235\200"},
    {0xFAAB, "\347\243\214"},
    {0xFAAC, "\347\252\261"},
    {0xFAAD, "\347\257\200"},
    {0xFAAE, "\347\261\273"},
    {0xFAAF, "\347\265\233"},
    {0xFAB0, "\347\267\264"},
    {0xFAB1, "\347\274\276"},
    {0xFAB2, "\350\200\205"},
    {0xFAB3, "\350\215\222"},
    {0xFAB4, "\350\217\257"},
    {0xFAB5, "\350\235\271"},
    {0xFAB6, "\350\245\201"},
    {0xFAB7, "\350\246\206"},
    {0xFAB8, "\350\246\226"},
    {0xFAB9, "\350\252\277"},
    {0xFABA, "\350\253\270"},
    {0xFABB, "\350\253\213"},
    {0xFABC, "\350\254\201"},
    {0xFABD, "\350\253\276"},
    {0xFABE, "\350\253\255"},
    {0xFABF, "\350\254\271"},
    {0xFAC0, "\350\256\212"},
    {0xFAC1, "\350\264\210"},
    {0xFAC2, "\350\274\270"},
    {0xFAC3, "\351\201\262"},
    {0xFAC4, "\351\206\231"},
    {0xFAC5, "\351\211\266"},
    {0xFAC6, "\351\231\274"},
    {0xFAC7, "\351\233\243"},
    {0xFAC8, "\351\235\226"},
    {0xFAC9, "\351\237\233"},
    {0xFACA, "\351\237\277"},
    {0xFACB, "\351\240\213"},
    {0xFACC, "\351\240\273"},
    {0xFACD, "\351\254\222"},
    {0xFACE, "\351\276\234"},
    {0xFACF, "\360\242\241\212"},
    {0xFAD0, "\360\242\241\204"},
    {0xFAD1, "\360\243\217\225"},
    {0xFAD2, "\343\256\235"},
    {0xFAD3, "\344\200\230"},
    {0xFAD4, "\344\200\271"},
    {0xFAD5, "\360\245\211\211"},
    {0xFAD6, "\360\245\263\220"},
    {0xFAD7, "\360\247\273\223"},
    {0xFAD8, "\351\275\203"},
    {0xFAD9, "\351\276\216"},
    {0xFB00, "ff"},
    {0xFB01, "fi"},
    {0xFB02, "fl"},
    {0xFB03, "ffi"},
    {0xFB04, "ffl"},
    {0xFB05, "st"},
    {0xFB06, "st"},
    {0xFB13, "\325\264\325\266"},
    {0xFB14, "\325\264\325\245"},
    {0xFB15, "\325\264\325\253"},
    {0xFB16, "\325\276\325\266"},
    {0xFB17, "\325\264\325\255"},
    {0xFB1D, "\327\231\326\264"},
    {0xFB1F, "\327\262\326\267"},
    {0xFB20, "\327\242"},
    {0xFB21, "\327\220"},
    {0xFB22, "\327\223"},
    {0xFB23, "\327\224"},
    {0xFB24, "\327\233"},
    {0xFB25, "\327\234"},
    {0xFB26, "\327\235"},
    {0xFB27, "\327\250"},
    {0xFB28, "\327\252"},
    {0xFB29, "+"},
    {0xFB2A, "\327\251\327\201"},
    {0xFB2B, "\327\251\327\202"},
    {0xFB2C, "\327\251\326\274\327\201"},
    {0xFB2D, "\327\251\326\274\327\202"},
    {0xFB2E, "\327\220\326\267"},
    {0xFB2F, "\327\220\326\270"},
    {0xFB30, "\327\220\326\274"},
    {0xFB31, "\327\221\326\274"},
    {0xFB32, "\327\222\326\274"},
    {0xFB33, "\327\223\326\274"},
    {0xFB34, "\327\224\326\274"},
    {0xFB35, "\327\225\326\274"},
    {0xFB36, "\327\226\326\274"},
    {0xFB38, "\327\230\326\274"},
    {0xFB39, "\327\231\326\274"},
    {0xFB3A, "\327\232\326\274"},
    {0xFB3B, "\327\233\326\274"},
    {0xFB3C, "\327\234\326\274"},
    {0xFB3E, "\327\236\326\274"},
    {0xFB40, "\327\240\326\274"},
    {0xFB41, "\327\241\326\274"},
    {0xFB43, "\327\243\326\274"},
    {0xFB44, "\327\244\326\274"},
    {0xFB46, "\327\246\326\274"},
    {0xFB47, "\327\247\326\274"},
    {0xFB48, "\327\250\326\274"},
    {0xFB49, "\327\251\326\274"},
    {0xFB4A, "\327\252\326\274"},
    {0xFB4B, "\327\225\326\271"},
    {0xFB4C, "\327\221\326\277"},
    {0xFB4D, "\327\233\326\277"},
    {0xFB4E, "\327\244\326\277"},
    {0xFB4F, "\327\220\327\234"},
    {0xFB50, "\331\261"},
    {0xFB51, "\331\261"},
    {0xFB52, "\331\273"},
    {0xFB53, "\331\273"},
    {0xFB54, "\331\273"},
    {0xFB55, "\331\273"},
    {0xFB56, "\331\276"},
    {0xFB57, "\331\276"},
    {0xFB58, "\331\276"},
    {0xFB59, "\331\276"},
    {0xFB5A, "\332\200"},
    {0xFB5B, "\332\200"},
    {0xFB5C, "\332\200"},
    {0xFB5D, "\332\200"},
    {0xFB5E, "\331\272"},
    {0xFB5F, "\331\272"},
    {0xFB60, "\331\272"},
    {0xFB61, "\331\272"},
    {0xFB62, "\331\277"},
    {0xFB63, "\331\277"},
    {0xFB64, "\331\277"},
    {0xFB65, "\331\277"},
    {0xFB66, "\331\271"},
    {0xFB67, "\331\271"},
    {0xFB68, "\331\271"},
    {0xFB69, "\331\271"},
    {0xFB6A, "\332\244"},
    {0xFB6B, "\332\244"},
    {0xFB6C, "\332\244"},
    {0xFB6D, "\332\244"},
    {0xFB6E, "\332\246"},
    {0xFB6F, "\332\246"},
    {0xFB70, "\332\246"},
    {0xFB71, "\332\246"},
    {0xFB72, "\332\204"},
    {0xFB73, "\332\204"},
    {0xFB74, "\332\204"},
    {0xFB75, "\332\204"},
    {0xFB76, "\332\203"},
    {0xFB77, "\332\203"},
    {0xFB78, "\332\203"},
    {0xFB79, "\332\203"},
    {0xFB7A, "\332\206"},
    {0xFB7B, "\332\206"},
    {0xFB7C, "\332\206"},
    {0xFB7D, "\332\206"},
    {0xFB7E, "\332\207"},
    {0xFB7F, "\332\207"},
    {0xFB80, "\332\207"},
    {0xFB81, "\332\207"},
    {0xFB82, "\332\215"},
    {0xFB83, "\332\215"},
    {0xFB84, "\332\214"},
    {0xFB85, "\332\214"},
    {0xFB86, "\332\216"},
    {0xFB87, "\332\216"},
    {0xFB88, "\332\210"},
    {0xFB89, "\332\210"},
    {0xFB8A, "\332\230"},
    {0xFB8B, "\332\230"},
    {0xFB8C, "\332\221"},
    {0xFB8D, "\332\221"},
    {0xFB8E, "\332\251"},
    {0xFB8F, "\332\251"},
    {0xFB90, "\332\251"},
    {0xFB91, "\332\251"},
    {0xFB92, "\332\257"},
    {0xFB93, "\332\257"},
    {0xFB94, "\332\257"},
    {0xFB95, "\332\257"},
    {0xFB96, "\332\263"},
    {0xFB97, "\332\263"},
    {0xFB98, "\332\263"},
    {0xFB99, "\332\263"},
    {0xFB9A, "\332\261"},
    {0xFB9B, "\332\261"},
    {0xFB9C, "\332\261"},
    {0xFB9D, "\332\261"},
    {0xFB9E, "\332\272"},
    {0xFB9F, "\332\272"},
    {0xFBA0, "\332\273"},
    {0xFBA1, "\332\273"},
    {0xFBA2, "\332\273"},
    {0xFBA3, "\332\273"},
    {0xFBA4, "\333\200"},
    {0xFBA5, "\333\200"},
    {0xFBA6, "\333\201"},
    {0xFBA7, "\333\201"},
    {0xFBA8, "\333\201"},
    {0xFBA9, "\333\201"},
    {0xFBAA, "\332\276"},
    {0xFBAB, "\332\276"},
    {0xFBAC, "\332\276"},
    {0xFBAD, "\332\276"},
    {0xFBAE, "\333\222"},
    {0xFBAF, "\333\222"},
    {0xFBB0, "\333\223"},
    {0xFBB1, "\333\223"},
    {0xFBD3, "\332\255"},
    {0xFBD4, "\332\255"},
    {0xFBD5, "\332\255"},
    {0xFBD6, "\332\255"},
    {0xFBD7, "\333\207"},
    {0xFBD8, "\333\207"},
    {0xFBD9, "\333\206"},
    {0xFBDA, "\333\206"},
    {0xFBDB, "\333\210"},
    {0xFBDC, "\333\210"},
    {0xFBDD, "\333\207\331\264"},
    {0xFBDE, "\333\213"},
    {0xFBDF, "\333\213"},
    {0xFBE0, "\333\205"},
    {0xFBE1, "\333\205"},
    {0xFBE2, "\333\211"},
    {0xFBE3, "\333\211"},
    {0xFBE4, "\333\220"},
    {0xFBE5, "\333\220"},
    {0xFBE6, "\333\220"},
    {0xFBE7, "\333\220"},
    {0xFBE8, "\331\211"},
    {0xFBE9, "\331\211"},
    {0xFBEA, "\330\246\330\247"},
    {0xFBEB, "\330\246\330\247"},
    {0xFBEC, "\330\246\333\225"},
    {0xFBED, "\330\246\333\225"},
    {0xFBEE, "\330\246\331\210"},
    {0xFBEF, "\330\246\331\210"},
    {0xFBF0, "\330\246\333\207"},
    {0xFBF1, "\330\246\333\207"},
    {0xFBF2, "\330\246\333\206"},
    {0xFBF3, "\330\246\333\206"},
    {0xFBF4, "\330\246\333\210"},
    {0xFBF5, "\330\246\333\210"},
    {0xFBF6, "\330\246\333\220"},
    {0xFBF7, "\330\246\333\220"},
    {0xFBF8, "\330\246\333\220"},
    {0xFBF9, "\330\246\331\211"},
    {0xFBFA, "\330\246\331\211"},
    {0xFBFB, "\330\246\331\211"},
    {0xFBFC, "\333\214"},
    {0xFBFD, "\333\214"},
    {0xFBFE, "\333\214"},
    {0xFBFF, "\333\214"},
    {0xFC00, "\330\246\330\254"},
    {0xFC01, "\330\246\330\255"},
    {0xFC02, "\330\246\331\205"},
    {0xFC03, "\330\246\331\211"},
    {0xFC04, "\330\246\331\212"},
    {0xFC05, "\330\250\330\254"},
    {0xFC06, "\330\250\330\255"},
    {0xFC07, "\330\250\330\256"},
    {0xFC08, "\330\250\331\205"},
    {0xFC09, "\330\250\331\211"},
    {0xFC0A, "\330\250\331\212"},
    {0xFC0B, "\330\252\330\254"},
    {0xFC0C, "\330\252\330\255"},
    {0xFC0D, "\330\252\330\256"},
    {0xFC0E, "\330\252\331\205"},
    {0xFC0F, "\330\252\331\211"},
    {0xFC10, "\330\252\331\212"},
    {0xFC11, "\330\253\330\254"},
    {0xFC12, "\330\253\331\205"},
    {0xFC13, "\330\253\331\211"},
    {0xFC14, "\330\253\331\212"},
    {0xFC15, "\330\254\330\255"},
    {0xFC16, "\330\254\331\205"},
    {0xFC17, "\330\255\330\254"},
    {0xFC18, "\330\255\331\205"},
    {0xFC19, "\330\256\330\254"},
    {0xFC1A, "\330\256\330\255"},
    {0xFC1B, "\330\256\331\205"},
    {0xFC1C, "\330\263\330\254"},
    {0xFC1D, "\330\263\330\255"},
    {0xFC1E, "\330\263\330\256"},
    {0xFC1F, "\330\263\331\205"},
    {0xFC20, "\330\265\330\255"},
    {0xFC21, "\330\265\331\205"},
    {0xFC22, "\330\266\330\254"},
    {0xFC23, "\330\266\330\255"},
    {0xFC24, "\330\266\330\256"},
    {0xFC25, "\330\266\331\205"},
    {0xFC26, "\330\267\330\255"},
    {0xFC27, "\330\267\331\205"},
    {0xFC28, "\330\270\331\205"},
    {0xFC29, "\330\271\330\254"},
    {0xFC2A, "\330\271\331\205"},
    {0xFC2B, "\330\272\330\254"},
    {0xFC2C, "\330\272\331\205"},
    {0xFC2D, "\331\201\330\254"},
    {0xFC2E, "\331\201\330\255"},
    {0xFC2F, "\331\201\330\256"},
    {0xFC30, "\331\201\331\205"},
    {0xFC31, "\331\201\331\211"},
    {0xFC32, "\331\201\331\212"},
    {0xFC33, "\331\202\330\255"},
    {0xFC34, "\331\202\331\205"},
    {0xFC35, "\331\202\331\211"},
    {0xFC36, "\331\202\331\212"},
    {0xFC37, "\331\203\330\247"},
    {0xFC38, "\331\203\330\254"},
    {0xFC39, "\331\203\330\255"},
    {0xFC3A, "\331\203\330\256"},
    {0xFC3B, "\331\203\331\204"},
    {0xFC3C, "\331\203\331\205"},
    {0xFC3D, "\331\203\331\211"},
    {0xFC3E, "\331\203\331\212"},
    {0xFC3F, "\331\204\330\254"},
    {0xFC40, "\331\204\330\255"},
    {0xFC41, "\331\204\330\256"},
    {0xFC42, "\331\204\331\205"},
    {0xFC43, "\331\204\331\211"},
    {0xFC44, "\331\204\331\212"},
    {0xFC45, "\331\205\330\254"},
    {0xFC46, "\331\205\330\255"},
    {0xFC47, "\331\205\330\256"},
    {0xFC48, "\331\205\331\205"},
    {0xFC49, "\331\205\331\211"},
    {0xFC4A, "\331\205\331\212"},
    {0xFC4B, "\331\206\330\254"},
    {0xFC4C, "\331\206\330\255"},
    {0xFC4D, "\331\206\330\256"},
    {0xFC4E, "\331\206\331\205"},
    {0xFC4F, "\331\206\331\211"},
    {0xFC50, "\331\206\331\212"},
    {0xFC51, "\331\207\330\254"},
    {0xFC52, "\331\207\331\205"},
    {0xFC53, "\331\207\331\211"},
    {0xFC54, "\331\207\331\212"},
    {0xFC55, "\331\212\330\254"},
    {0xFC56, "\331\212\330\255"},
    {0xFC57, "\331\212\330\256"},
    {0xFC58, "\331\212\331\205"},
    {0xFC59, "\331\212\331\211"},
    {0xFC5A, "\331\212\331\212"},
    {0xFC5B, "\330\260\331\260"},
    {0xFC5C, "\330\261\331\260"},
    {0xFC5D, "\331\211\331\260"},
    {0xFC5E, " \331\214\331\221"},
    {0xFC5F, " \331\215\331\221"},
    {0xFC60, " \331\216\331\221"},
    {0xFC61, " \331\217\331\221"},
    {0xFC62, " \331\220\331\221"},
    {0xFC63, " \331\221\331\260"},
    {0xFC64, "\330\246\330\261"},
    {0xFC65, "\330\246\330\262"},
    {0xFC66, "\330\246\331\205"},
    {0xFC67, "\330\246\331\206"},
    {0xFC68, "\330\246\331\211"},
    {0xFC69, "\330\246\331\212"},
    {0xFC6A, "\330\250\330\261"},
    {0xFC6B, "\330\250\330\262"},
    {0xFC6C, "\330\250\331\205"},
    {0xFC6D, "\330\250\331\206"},
    {0xFC6E, "\330\250\331\211"},
    {0xFC6F, "\330\250\331\212"},
    {0xFC70, "\330\252\330\261"},
    {0xFC71, "\330\252\330\262"},
    {0xFC72, "\330\252\331\205"},
    {0xFC73, "\330\252\331\206"},
    {0xFC74, "\330\252\331\211"},
    {0xFC75, "\330\252\331\212"},
    {0xFC76, "\330\253\330\261"},
    {0xFC77, "\330\253\330\262"},
    {0xFC78, "\330\253\331\205"},
    {0xFC79, "\330\253\331\206"},
    {0xFC7A, "\330\253\331\211"},
    {0xFC7B, "\330\253\331\212"},
    {0xFC7C, "\331\201\331\211"},
    {0xFC7D, "\331\201\331\212"},
    {0xFC7E, "\331\202\331\211"},
    {0xFC7F, "\331\202\331\212"},
    {0xFC80, "\331\203\330\247"},
    {0xFC81, "\331\203\331\204"},
    {0xFC82, "\331\203\331\205"},
    {0xFC83, "\331\203\331\211"},
    {0xFC84, "\331\203\331\212"},
    {0xFC85, "\331\204\331\205"},
    {0xFC86, "\331\204\331\211"},
    {0xFC87, "\331\204\331\212"},
    {0xFC88, "\331\205\330\247"},
    {0xFC89, "\331\205\331\205"},
    {0xFC8A, "\331\206\330\261"},
    {0xFC8B, "\331\206\330\262"},
    {0xFC8C, "\331\206\331\205"},
    {0xFC8D, "\331\206\331\206"},
    {0xFC8E, "\331\206\331\211"},
    {0xFC8F, "\331\206\331\212"},
    {0xFC90, "\331\211\331\260"},
    {0xFC91, "\331\212\330\261"},
    {0xFC92, "\331\212\330\262"},
    {0xFC93, "\331\212\331\205"},
    {0xFC94, "\331\212\331\206"},
    {0xFC95, "\331\212\331\211"},
    {0xFC96, "\331\212\331\212"},
    {0xFC97, "\330\246\330\254"},
    {0xFC98, "\330\246\330\255"},
    {0xFC99, "\330\246\330\256"},
    {0xFC9A, "\330\246\331\205"},
    {0xFC9B, "\330\246\331\207"},
    {0xFC9C, "\330\250\330\254"},
    {0xFC9D, "\330\250\330\255"},
    {0xFC9E, "\330\250\330\256"},
    {0xFC9F, "\330\250\331\205"},
    {0xFCA0, "\330\250\331\207"},
    {0xFCA1, "\330\252\330\254"},
    {0xFCA2, "\330\252\330\255"},
    {0xFCA3, "\330\252\330\256"},
    {0xFCA4, "\330\252\331\205"},
    {0xFCA5, "\330\252\331\207"},
    {0xFCA6, "\330\253\331\205"},
    {0xFCA7, "\330\254\330\255"},
    {0xFCA8, "\330\254\331\205"},
    {0xFCA9, "\330\255\330\254"},
    {0xFCAA, "\330\255\331\205"},
    {0xFCAB, "\330\256\330\254"},
    {0xFCAC, "\330\256\331\205"},
    {0xFCAD, "\330\263\330\254"},
    {0xFCAE, "\330\263\330\255"},
    {0xFCAF, "\330\263\330\256"},
    {0xFCB0, "\330\263\331\205"},
    {0xFCB1, "\330\265\330\255"},
    {0xFCB2, "\330\265\330\256"},
    {0xFCB3, "\330\265\331\205"},
    {0xFCB4, "\330\266\330\254"},
    {0xFCB5, "\330\266\330\255"},
    {0xFCB6, "\330\266\330\256"},
    {0xFCB7, "\330\266\331\205"},
    {0xFCB8, "\330\267\330\255"},
    {0xFCB9, "\330\270\331\205"},
    {0xFCBA, "\330\271\330\254"},
    {0xFCBB, "\330\271\331\205"},
    {0xFCBC, "\330\272\330\254"},
    {0xFCBD, "\330\272\331\205"},
    {0xFCBE, "\331\201\330\254"},
    {0xFCBF, "\331\201\330\255"},
    {0xFCC0, "\331\201\330\256"},
    {0xFCC1, "\331\201\331\205"},
    {0xFCC2, "\331\202\330\255"},
    {0xFCC3, "\331\202\331\205"},
    {0xFCC4, "\331\203\330\254"},
    {0xFCC5, "\331\203\330\255"},
    {0xFCC6, "\331\203\330\256"},
    {0xFCC7, "\331\203\331\204"},
    {0xFCC8, "\331\203\331\205"},
    {0xFCC9, "\331\204\330\254"},
    {0xFCCA, "\331\204\330\255"},
    {0xFCCB, "\331\204\330\256"},
    {0xFCCC, "\331\204\331\205"},
    {0xFCCD, "\331\204\331\207"},
    {0xFCCE, "\331\205\330\254"},
    {0xFCCF, "\331\205\330\255"},
    {0xFCD0, "\331\205\330\256"},
    {0xFCD1, "\331\205\331\205"},
    {0xFCD2, "\331\206\330\254"},
    {0xFCD3, "\331\206\330\255"},
    {0xFCD4, "\331\206\330\256"},
    {0xFCD5, "\331\206\331\205"},
    {0xFCD6, "\331\206\331\207"},
    {0xFCD7, "\331\207\330\254"},
    {0xFCD8, "\331\207\331\205"},
    {0xFCD9, "\331\207\331\260"},
    {0xFCDA, "\331\212\330\254"},
    {0xFCDB, "\331\212\330\255"},
    {0xFCDC, "\331\212\330\256"},
    {0xFCDD, "\331\212\331\205"},
    {0xFCDE, "\331\212\331\207"},
    {0xFCDF, "\330\246\331\205"},
    {0xFCE0, "\330\246\331\207"},
    {0xFCE1, "\330\250\331\205"},
    {0xFCE2, "\330\250\331\207"},
    {0xFCE3, "\330\252\331\205"},
    {0xFCE4, "\330\252\331\207"},
    {0xFCE5, "\330\253\331\205"},
    {0xFCE6, "\330\253\331\207"},
    {0xFCE7, "\330\263\331\205"},
    {0xFCE8, "\330\263\331\207"},
    {0xFCE9, "\330\264\331\205"},
    {0xFCEA, "\330\264\331\207"},
    {0xFCEB, "\331\203\331\204"},
    {0xFCEC, "\331\203\331\205"},
    {0xFCED, "\331\204\331\205"},
    {0xFCEE, "\331\206\331\205"},
    {0xFCEF, "\331\206\331\207"},
    {0xFCF0, "\331\212\331\205"},
    {0xFCF1, "\331\212\331\207"},
    {0xFCF2, "\331\200\331\216\331\221"},
    {0xFCF3, "\331\200\331\217\331\221"},
    {0xFCF4, "\331\200\331\220\331\221"},
    {0xFCF5, "\330\267\331\211"},
    {0xFCF6, "\330\267\331\212"},
    {0xFCF7, "\330\271\331\211"},
    {0xFCF8, "\330\271\331\212"},
    {0xFCF9, "\330\272\331\211"},
    {0xFCFA, "\330\272\331\212"},
    {0xFCFB, "\330\263\331\211"},
    {0xFCFC, "\330\263\331\212"},
    {0xFCFD, "\330\264\331\211"},
    {0xFCFE, "\330\264\331\212"},
    {0xFCFF, "\330\255\331\211"},
    {0xFD00, "\330\255\331\212"},
    {0xFD01, "\330\254\331\211"},
    {0xFD02, "\330\254\331\212"},
    {0xFD03, "\330\256\331\211"},
    {0xFD04, "\330\256\331\212"},
    {0xFD05, "\330\265\331\211"},
    {0xFD06, "\330\265\331\212"},
    {0xFD07, "\330\266\331\211"},
    {0xFD08, "\330\266\331\212"},
    {0xFD09, "\330\264\330\254"},
    {0xFD0A, "\330\264\330\255"},
    {0xFD0B, "\330\264\330\256"},
    {0xFD0C, "\330\264\331\205"},
    {0xFD0D, "\330\264\330\261"},
    {0xFD0E, "\330\263\330\261"},
    {0xFD0F, "\330\265\330\261"},
    {0xFD10, "\330\266\330\261"},
    {0xFD11, "\330\267\331\211"},
    {0xFD12, "\330\267\331\212"},
    {0xFD13, "\330\271\331\211"},
    {0xFD14, "\330\271\331\212"},
    {0xFD15, "\330\272\331\211"},
    {0xFD16, "\330\272\331\212"},
    {0xFD17, "\330\263\331\211"},
    {0xFD18, "\330\263\331\212"},
    {0xFD19, "\330\264\331\211"},
    {0xFD1A, "\330\264\331\212"},
    {0xFD1B, "\330\255\331\211"},
    {0xFD1C, "\330\255\331\212"},
    {0xFD1D, "\330\254\331\211"},
    {0xFD1E, "\330\254\331\212"},
    {0xFD1F, "\330\256\331\211"},
    {0xFD20, "\330\256\331\212"},
    {0xFD21, "\330\265\331\211"},
    {0xFD22, "\330\265\331\212"},
    {0xFD23, "\330\266\331\211"},
    {0xFD24, "\330\266\331\212"},
    {0xFD25, "\330\264\330\254"},
    {0xFD26, "\330\264\330\255"},
    {0xFD27, "\330\264\330\256"},
    {0xFD28, "\330\264\331\205"},
    {0xFD29, "\330\264\330\261"},
    {0xFD2A, "\330\263\330\261"},
    {0xFD2B, "\330\265\330\261"},
    {0xFD2C, "\330\266\330\261"},
    {0xFD2D, "\330\264\330\254"},
    {0xFD2E, "\330\264\330\255"},
    {0xFD2F, "\330\264\330\256"},
    {0xFD30, "\330\264\331\205"},
    {0xFD31, "\330\263\331\207"},
    {0xFD32, "\330\264\331\207"},
    {0xFD33, "\330\267\331\205"},
    {0xFD34, "\330\263\330\254"},
    {0xFD35, "\330\263\330\255"},
    {0xFD36, "\330\263\330\256"},
    {0xFD37, "\330\264\330\254"},
    {0xFD38, "\330\264\330\255"},
    {0xFD39, "\330\264\330\256"},
    {0xFD3A, "\330\267\331\205"},
    {0xFD3B, "\330\270\331\205"},
    {0xFD3C, "\330\247\331\213"},
    {0xFD3D, "\330\247\331\213"},
    {0xFD50, "\330\252\330\254\331\205"},
    {0xFD51, "\330\252\330\255\330\254"},
    {0xFD52, "\330\252\330\255\330\254"},
    {0xFD53, "\330\252\330\255\331\205"},
    {0xFD54, "\330\252\330\256\331\205"},
    {0xFD55, "\330\252\331\205\330\254"},
    {0xFD56, "\330\252\331\205\330\255"},
    {0xFD57, "\330\252\331\205\330\256"},
    {0xFD58, "\330\254\331\205\330\255"},
    {0xFD59, "\330\254\331\205\330\255"},
    {0xFD5A, "\330\255\331\205\331\212"},
    {0xFD5B, "\330\255\331\205\331\211"},
    {0xFD5C, "\330\263\330\255\330\254"},
    {0xFD5D, "\330\263\330\254\330\255"},
    {0xFD5E, "\330\263\330\254\331\211"},
    {0xFD5F, "\330\263\331\205\330\255"},
    {0xFD60, "\330\263\331\205\330\255"},
    {0xFD61, "\330\263\331\205\330\254"},
    {0xFD62, "\330\263\331\205\331\205"},
    {0xFD63, "\330\263\331\205\331\205"},
    {0xFD64, "\330\265\330\255\330\255"},
    {0xFD65, "\330\265\330\255\330\255"},
    {0xFD66, "\330\265\331\205\331\205"},
    {0xFD67, "\330\264\330\255\331\205"},
    {0xFD68, "\330\264\330\255\331\205"},
    {0xFD69, "\330\264\330\254\331\212"},
    {0xFD6A, "\330\264\331\205\330\256"},
    {0xFD6B, "\330\264\331\205\330\256"},
    {0xFD6C, "\330\264\331\205\331\205"},
    {0xFD6D, "\330\264\331\205\331\205"},
    {0xFD6E, "\330\266\330\255\331\211"},
    {0xFD6F, "\330\266\330\256\331\205"},
    {0xFD70, "\330\266\330\256\331\205"},
    {0xFD71, "\330\267\331\205\330\255"},
    {0xFD72, "\330\267\331\205\330\255"},
    {0xFD73, "\330\267\331\205\331\205"},
    {0xFD74, "\330\267\331\205\331\212"},
    {0xFD75, "\330\271\330\254\331\205"},
    {0xFD76, "\330\271\331\205\331\205"},
    {0xFD77, "\330\271\331\205\331\205"},
    {0xFD78, "\330\271\331\205\331\211"},
    {0xFD79, "\330\272\331\205\331\205"},
    {0xFD7A, "\330\272\331\205\331\212"},
    {0xFD7B, "\330\272\331\205\331\211"},
    {0xFD7C, "\331\201\330\256\331\205"},
    {0xFD7D, "\331\201\330\256\331\205"},
    {0xFD7E, "\331\202\331\205\330\255"},
    {0xFD7F, "\331\202\331\205\331\205"},
    {0xFD80, "\331\204\330\255\331\205"},
    {0xFD81, "\331\204\330\255\331\212"},
    {0xFD82, "\331\204\330\255\331\211"},
    {0xFD83, "\331\204\330\254\330\254"},
    {0xFD84, "\331\204\330\254\330\254"},
    {0xFD85, "\331\204\330\256\331\205"},
    {0xFD86, "\331\204\330\256\331\205"},
    {0xFD87, "\331\204\331\205\330\255"},
    {0xFD88, "\331\204\331\205\330\255"},
    {0xFD89, "\331\205\330\255\330\254"},
    {0xFD8A, "\331\205\330\255\331\205"},
    {0xFD8B, "\331\205\330\255\331\212"},
    {0xFD8C, "\331\205\330\254\330\255"},
    {0xFD8D, "\331\205\330\254\331\205"},
    {0xFD8E, "\331\205\330\256\330\254"},
    {0xFD8F, "\331\205\330\256\331\205"},
    {0xFD92, "\331\205\330\254\330\256"},
    {0xFD93, "\331\207\331\205\330\254"},
    {0xFD94, "\331\207\331\205\331\205"},
    {0xFD95, "\331\206\330\255\331\205"},
    {0xFD96, "\331\206\330\255\331\211"},
    {0xFD97, "\331\206\330\254\331\205"},
    {0xFD98, "\331\206\330\254\331\205"},
    {0xFD99, "\331\206\330\254\331\211"},
    {0xFD9A, "\331\206\331\205\331\212"},
    {0xFD9B, "\331\206\331\205\331\211"},
    {0xFD9C, "\331\212\331\205\331\205"},
    {0xFD9D, "\331\212\331\205\331\205"},
    {0xFD9E, "\330\250\330\256\331\212"},
    {0xFD9F, "\330\252\330\254\331\212"},
    {0xFDA0, "\330\252\330\254\331\211"},
    {0xFDA1, "\330\252\330\256\331\212"},
    {0xFDA2, "\330\252\330\256\331\211"},
    {0xFDA3, "\330\252\331\205\331\212"},
    {0xFDA4, "\330\252\331\205\331\211"},
    {0xFDA5, "\330\254\331\205\331\212"},
    {0xFDA6, "\330\254\330\255\331\211"},
    {0xFDA7, "\330\254\331\205\331\211"},
    {0xFDA8, "\330\263\330\256\331\211"},
    {0xFDA9, "\330\265\330\255\331\212"},
    {0xFDAA, "\330\264\330\255\331\212"},
    {0xFDAB, "\330\266\330\255\331\212"},
    {0xFDAC, "\331\204\330\254\331\212"},
    {0xFDAD, "\331\204\331\205\331\212"},
    {0xFDAE, "\331\212\330\255\331\212"},
    {0xFDAF, "\331\212\330\254\331\212"},
    {0xFDB0, "\331\212\331\205\331\212"},
    {0xFDB1, "\331\205\331\205\331\212"},
    {0xFDB2, "\331\202\331\205\331\212"},
    {0xFDB3, "\331\206\330\255\331\212"},
    {0xFDB4, "\331\202\331\205\330\255"},
    {0xFDB5, "\331\204\330\255\331\205"},
    {0xFDB6, "\330\271\331\205\331\212"},
    {0xFDB7, "\331\203\331\205\331\212"},
    {0xFDB8, "\331\206\330\254\330\255"},
    {0xFDB9, "\331\205\330\256\331\212"},
    {0xFDBA, "\331\204\330\254\331\205"},
    {0xFDBB, "\331\203\331\205\331\205"},
    {0xFDBC, "\331\204\330\254\331\205"},
    {0xFDBD, "\331\206\330\254\330\255"},
    {0xFDBE, "\330\254\330\255\331\212"},
    {0xFDBF, "\330\255\330\254\331\212"},
    {0xFDC0, "\331\205\330\254\331\212"},
    {0xFDC1, "\331\201\331\205\331\212"},
    {0xFDC2, "\330\250\330\255\331\212"},
    {0xFDC3, "\331\203\331\205\331\205"},
    {0xFDC4, "\330\271\330\254\331\205"},
    {0xFDC5, "\330\265\331\205\331\205"},
    {0xFDC6, "\330\263\330\256\331\212"},
    {0xFDC7, "\331\206\330\254\331\212"},
    {0xFDF0, "\330\265\331\204\333\222"},
    {0xFDF1, "\331\202\331\204\333\222"},
    {0xFDF2, "\330\247\331\204\331\204\331\207"},
    {0xFDF3, "\330\247\331\203\330\250\330\261"},
    {0xFDF4, "\331\205\330\255\331\205\330\257"},
    {0xFDF5, "\330\265\331\204\330\271\331\205"},
    {0xFDF6, "\330\261\330\263\331\210\331\204"},
    {0xFDF7, "\330\271\331\204\331\212\331\207"},
    {0xFDF8, "\331\210\330\263\331\204\331\205"},
    {0xFDF9, "\330\265\331\204\331\211"},
    {0xFDFA, "\330\265\331\204\331\211 \330\247\331\204\331\204\331\207 \330\271\331\204\331\212\331\207 \331\210\330\263\331\204\331\205"},
    {0xFDFB, "\330\254\331\204 \330\254\331\204\330\247\331\204\331\207"},
    {0xFDFC, "\330\261\333\214\330\247\331\204"},
    {0xFE10, ","},
    {0xFE11, "\343\200\201"},
    {0xFE12, "\343\200\202"},
    {0xFE13, ":"},
    {0xFE14, ";"},
    {0xFE15, "!"},
    {0xFE16, "?"},
    {0xFE17, "\343\200\226"},
    {0xFE18, "\343\200\227"},
    {0xFE19, "..."},
    {0xFE30, ".."},
    {0xFE31, "\342\200\224"},
    {0xFE32, "\342\200\223"},
    {0xFE33, "_"},
    {0xFE34, "_"},
    {0xFE35, "("},
    {0xFE36, ")"},
    {0xFE37, "{"},
    {0xFE38, "}"},
    {0xFE39, "\343\200\224"},
    {0xFE3A, "\343\200\225"},
    {0xFE3B, "\343\200\220"},
    {0xFE3C, "\343\200\221"},
    {0xFE3D, "\343\200\212"},
    {0xFE3E, "\343\200\213"},
    {0xFE3F, "\343\200\210"},
    {0xFE40, "\343\200\211"},
    {0xFE41, "\343\200\214"},
    {0xFE42, "\343\200\215"},
    {0xFE43, "\343\200\216"},
    {0xFE44, "\343\200\217"},
    {0xFE47, "["},
    {0xFE48, "]"},
    {0xFE49, " \314\205"},
    {0xFE4A, " \314\205"},
    {0xFE4B, " \314\205"},
    {0xFE4C, " \314\205"},
    {0xFE4D, "_"},
    {0xFE4E, "_"},
    {0xFE4F, "_"},
    {0xFE50, ","},
    {0xFE51, "\343\200\201"},
    {0xFE52, "."},
    {0xFE54, ";"},
    {0xFE55, ":"},
    {0xFE56, "?"},
    {0xFE57, "!"},
    {0xFE58, "\342\200\224"},
    {0xFE59, "("},
    {0xFE5A, ")"},
    {0xFE5B, "{"},
    {0xFE5C, "}"},
    {0xFE5D, "\343\200\224"},
    {0xFE5E, "\343\200\225"},
    {0xFE5F, "#"},
    {0xFE60, "&"},
    {0xFE61, "*"},
    {0xFE62, "+"},
    {0xFE63, "-"},
    {0xFE64, "<"},
    {0xFE65, ">"},
    {0xFE66, "="},
    {0xFE68, "\134"},
    {0xFE69, "$"},
    {0xFE6A, "%"},
    {0xFE6B, "@"},
    {0xFE70, " \331\213"},
    {0xFE71, "\331\200\331\213"},
    {0xFE72, " \331\214"},
    {0xFE74, " \331\215"},
    {0xFE76, " \331\216"},
    {0xFE77, "\331\200\331\216"},
    {0xFE78, " \331\217"},
    {0xFE79, "\331\200\331\217"},
    {0xFE7A, " \331\220"},
    {0xFE7B, "\331\200\331\220"},
    {0xFE7C, " \331\221"},
    {0xFE7D, "\331\200\331\221"},
    {0xFE7E, " \331\222"},
    {0xFE7F, "\331\200\331\222"},
    {0xFE80, "\330\241"},
    {0xFE81, "\330\242"},
    {0xFE82, "\330\242"},
    {0xFE83, "\330\243"},
    {0xFE84, "\330\243"},
    {0xFE85, "\330\244"},
    {0xFE86, "\330\244"},
    {0xFE87, "\330\245"},
    {0xFE88, "\330\245"},
    {0xFE89, "\330\246"},
    {0xFE8A, "\330\246"},
    {0xFE8B, "\330\246"},
    {0xFE8C, "\330\246"},
    {0xFE8D, "\330\247"},
    {0xFE8E, "\330\247"},
    {0xFE8F, "\330\250"},
    {0xFE90, "\330\250"},
    {0xFE91, "\330\250"},
    {0xFE92, "\330\250"},
    {0xFE93, "\330\251"},
    {0xFE94, "\330\251"},
    {0xFE95, "\330\252"},
    {0xFE96, "\330\252"},
    {0xFE97, "\330\252"},
    {0xFE98, "\330\252"},
    {0xFE99, "\330\253"},
    {0xFE9A, "\330\253"},
    {0xFE9B, "\330\253"},
    {0xFE9C, "\330\253"},
    {0xFE9D, "\330\254"},
    {0xFE9E, "\330\254"},
    {0xFE9F, "\330\254"},
    {0xFEA0, "\330\254"},
    {0xFEA1, "\330\255"},
    {0xFEA2, "\330\255"},
    {0xFEA3, "\330\255"},
    {0xFEA4, "\330\255"},
    {0xFEA5, "\330\256"},
    {0xFEA6, "\330\256"},
    {0xFEA7, "\330\256"},
    {0xFEA8, "\330\256"},
    {0xFEA9, "\330\257"},
    {0xFEAA, "\330\257"},
    {0xFEAB, "\330\260"},
    {0xFEAC, "\330\260"},
    {0xFEAD, "\330\261"},
    {0xFEAE, "\330\261"},
    {0xFEAF, "\330\262"},
    {0xFEB0, "\330\262"},
    {0xFEB1, "\330\263"},
    {0xFEB2, "\330\263"},
    {0xFEB3, "\330\263"},
    {0xFEB4, "\330\263"},
    {0xFEB5, "\330\264"},
    {0xFEB6, "\330\264"},
    {0xFEB7, "\330\264"},
    {0xFEB8, "\330\264"},
    {0xFEB9, "\330\265"},
    {0xFEBA, "\330\265"},
    {0xFEBB, "\330\265"},
    {0xFEBC, "\330\265"},
    {0xFEBD, "\330\266"},
    {0xFEBE, "\330\266"},
    {0xFEBF, "\330\266"},
    {0xFEC0, "\330\266"},
    {0xFEC1, "\330\267"},
    {0xFEC2, "\330\267"},
    {0xFEC3, "\330\267"},
    {0xFEC4, "\330\267"},
    {0xFEC5, "\330\270"},
    {0xFEC6, "\330\270"},
    {0xFEC7, "\330\270"},
    {0xFEC8, "\330\270"},
    {0xFEC9, "\330\271"},
    {0xFECA, "\330\271"},
    {0xFECB, "\330\271"},
    {0xFECC, "\330\271"},
    {0xFECD, "\330\272"},
    {0xFECE, "\330\272"},
    {0xFECF, "\330\272"},
    {0xFED0, "\330\272"},
    {0xFED1, "\331\201"},
    {0xFED2, "\331\201"},
    {0xFED3, "\331\201"},
    {0xFED4, "\331\201"},
    {0xFED5, "\331\202"},
    {0xFED6, "\331\202"},
    {0xFED7, "\331\202"},
    {0xFED8, "\331\202"},
    {0xFED9, "\331\203"},
    {0xFEDA, "\331\203"},
    {0xFEDB, "\331\203"},
    {0xFEDC, "\331\203"},
    {0xFEDD, "\331\204"},
    {0xFEDE, "\331\204"},
    {0xFEDF, "\331\204"},
    {0xFEE0, "\331\204"},
    {0xFEE1, "\331\205"},
    {0xFEE2, "\331\205"},
    {0xFEE3, "\331\205"},
    {0xFEE4, "\331\205"},
    {0xFEE5, "\331\206"},
    {0xFEE6, "\331\206"},
    {0xFEE7, "\331\206"},
    {0xFEE8, "\331\206"},
    {0xFEE9, "\331\207"},
    {0xFEEA, "\331\207"},
    {0xFEEB, "\331\207"},
    {0xFEEC, "\331\207"},
    {0xFEED, "\331\210"},
    {0xFEEE, "\331\210"},
    {0xFEEF, "\331\211"},
    {0xFEF0, "\331\211"},
    {0xFEF1, "\331\212"},
    {0xFEF2, "\331\212"},
    {0xFEF3, "\331\212"},
    {0xFEF4, "\331\212"},
    {0xFEF5, "\331\204\330\242"},
    {0xFEF6, "\331\204\330\242"},
    {0xFEF7, "\331\204\330\243"},
    {0xFEF8, "\331\204\330\243"},
    {0xFEF9, "\331\204\330\245"},
    {0xFEFA, "\331\204\330\245"},
    {0xFEFB, "\331\204\330\247"},
    {0xFEFC, "\331\204\330\247"},
    {0xFF01, "!"},
    {0xFF02, "\042"},
    {0xFF03, "#"},
    {0xFF04, "$"},
    {0xFF05, "%"},
    {0xFF06, "&"},
    {0xFF07, "'"},
    {0xFF08, "("},
    {0xFF09, ")"},
    {0xFF0A, "*"},
    {0xFF0B, "+"},
    {0xFF0C, ","},
    {0xFF0D, "-"},
    {0xFF0E, "."},
    {0xFF0F, "/"},
    {0xFF10, "0"},
    {0xFF11, "1"},
    {0xFF12, "2"},
    {0xFF13, "3"},
    {0xFF14, "4"},
    {0xFF15, "5"},
    {0xFF16, "6"},
    {0xFF17, "7"},
    {0xFF18, "8"},
    {0xFF19, "9"},
    {0xFF1A, ":"},
    {0xFF1B, ";"},
    {0xFF1C, "<"},
    {0xFF1D, "="},
    {0xFF1E, ">"},
    {0xFF1F, "?"},
    {0xFF20, "@"},
    {0xFF21, "a"},
    {0xFF22, "b"},
    {0xFF23, "c"},
    {0xFF24, "d"},
    {0xFF25, "e"},
    {0xFF26, "f"},
    {0xFF27, "g"},
    {0xFF28, "h"},
    {0xFF29, "i"},
    {0xFF2A, "j"},
    {0xFF2B, "k"},
    {0xFF2C, "l"},
    {0xFF2D, "m"},
    {0xFF2E, "n"},
    {0xFF2F, "o"},
    {0xFF30, "p"},
    {0xFF31, "q"},
    {0xFF32, "r"},
    {0xFF33, "s"},
    {0xFF34, "t"},
    {0xFF35, "u"},
    {0xFF36, "v"},
    {0xFF37, "w"},
    {0xFF38, "x"},
    {0xFF39, "y"},
    {0xFF3A, "z"},
    {0xFF3B, "["},
    {0xFF3C, "\134"},
    {0xFF3D, "]"},
    {0xFF3E, "^"},
    {0xFF3F, "_"},
    {0xFF40, "`"},
    {0xFF41, "a"},
    {0xFF42, "b"},
    {0xFF43, "c"},
    {0xFF44, "d"},
    {0xFF45, "e"},
    {0xFF46, "f"},
    {0xFF47, "g"},
    {0xFF48, "h"},
    {0xFF49, "i"},
    {0xFF4A, "j"},
    {0xFF4B, "k"},
    {0xFF4C, "l"},
    {0xFF4D, "m"},
    {0xFF4E, "n"},
    {0xFF4F, "o"},
    {0xFF50, "p"},
    {0xFF51, "q"},
    {0xFF52, "r"},
    {0xFF53, "s"},
    {0xFF54, "t"},
    {0xFF55, "u"},
    {0xFF56, "v"},
    {0xFF57, "w"},
    {0xFF58, "x"},
    {0xFF59, "y"},
    {0xFF5A, "z"},
    {0xFF5B, "{"},
    {0xFF5C, "|"},
    {0xFF5D, "}"},
    {0xFF5E, "~"},
    {0xFF5F, "\342\246\205"},
    {0xFF60, "\342\246\206"},
    {0xFF61, "\343\200\202"},
    {0xFF62, "\343\200\214"},
    {0xFF63, "\343\200\215"},
    {0xFF64, "\343\200\201"},
    {0xFF65, "\343\203\273"},
    {0xFF66, "\343\203\262"},
    {0xFF67, "\343\202\241"},
    {0xFF68, "\343\202\243"},
    {0xFF69, "\343\202\245"},
    {0xFF6A, "\343\202\247"},
    {0xFF6B, "\343\202\251"},
    {0xFF6C, "\343\203\243"},
    {0xFF6D, "\343\203\245"},
    {0xFF6E, "\343\203\247"},
    {0xFF6F, "\343\203\203"},
    {0xFF70, "\343\203\274"},
    {0xFF71, "\343\202\242"},
    {0xFF72, "\343\202\244"},
    {0xFF73, "\343\202\246"},
    {0xFF74, "\343\202\250"},
    {0xFF75, "\343\202\252"},
    {0xFF76, "\343\202\253"},
    {0xFF77, "\343\202\255"},
    {0xFF78, "\343\202\257"},
    {0xFF79, "\343\202\261"},
    {0xFF7A, "\343\202\263"},
    {0xFF7B, "\343\202\265"},
    {0xFF7C, "\343\202\267"},
    {0xFF7D, "\343\202\271"},
    {0xFF7E, "\343\202\273"},
    {0xFF7F, "\343\202\275"},
    {0xFF80, "\343\202\277"},
    {0xFF81, "\343\203\201"},
    {0xFF82, "\343\203\204"},
    {0xFF83, "\343\203\206"},
    {0xFF84, "\343\203\210"},
    {0xFF85, "\343\203\212"},
    {0xFF86, "\343\203\213"},
    {0xFF87, "\343\203\214"},
    {0xFF88, "\343\203\215"},
    {0xFF89, "\343\203\216"},
    {0xFF8A, "\343\203\217"},
    {0xFF8B, "\343\203\222"},
    {0xFF8C, "\343\203\225"},
    {0xFF8D, "\343\203\230"},
    {0xFF8E, "\343\203\233"},
    {0xFF8F, "\343\203\236"},
    {0xFF90, "\343\203\237"},
    {0xFF91, "\343\203\240"},
    {0xFF92, "\343\203\241"},
    {0xFF93, "\343\203\242"},
    {0xFF94, "\343\203\244"},
    {0xFF95, "\343\203\246"},
    {0xFF96, "\343\203\250"},
    {0xFF97, "\343\203\251"},
    {0xFF98, "\343\203\252"},
    {0xFF99, "\343\203\253"},
    {0xFF9A, "\343\203\254"},
    {0xFF9B, "\343\203\255"},
    {0xFF9C, "\343\203\257"},
    {0xFF9D, "\343\203\263"},
    {0xFF9E, "\343\202\231"},
    {0xFF9F, "\343\202\232"},
    {0xFFA0, "\341\205\240"},
    {0xFFA1, "\341\204\200"},
    {0xFFA2, "\341\204\201"},
    {0xFFA3, "\341\206\252"},
    {0xFFA4, "\341\204\202"},
    {0xFFA5, "\341\206\254"},
    {0xFFA6, "\341\206\255"},
    {0xFFA7, "\341\204\203"},
    {0xFFA8, "\341\204\204"},
    {0xFFA9, "\341\204\205"},
    {0xFFAA, "\341\206\260"},
    {0xFFAB, "\341\206\261"},
    {0xFFAC, "\341\206\262"},
    {0xFFAD, "\341\206\263"},
    {0xFFAE, "\341\206\264"},
    {0xFFAF, "\341\206\265"},
    {0xFFB0, "\341\204\232"},
    {0xFFB1, "\341\204\206"},
    {0xFFB2, "\341\204\207"},
    {0xFFB3, "\341\204\210"},
    {0xFFB4, "\341\204\241"},
    {0xFFB5, "\341\204\211"},
    {0xFFB6, "\341\204\212"},
    {0xFFB7, "\341\204\213"},
    {0xFFB8, "\341\204\214"},
    {0xFFB9, "\341\204\215"},
    {0xFFBA, "\341\204\216"},
    {0xFFBB, "\341\204\217"},
    {0xFFBC, "\341\204\220"},
    {0xFFBD, "\341\204\221"},
    {0xFFBE, "\341\204\222"},
    {0xFFC2, "\341\205\241"},
    {0xFFC3, "\341\205\242"},
    {0xFFC4, "\341\205\243"},
    {0xFFC5, "\341\205\244"},
    {0xFFC6, "\341\205\245"},
    {0xFFC7, "\341\205\246"},
    {0xFFCA, "\341\205\247"},
    {0xFFCB, "\341\205\250"},
    {0xFFCC, "\341\205\251"},
    {0xFFCD, "\341\205\252"},
    {0xFFCE, "\341\205\253"},
    {0xFFCF, "\341\205\254"},
    {0xFFD2, "\341\205\255"},
    {0xFFD3, "\341\205\256"},
    {0xFFD4, "\341\205\257"},
    {0xFFD5, "\341\205\260"},
    {0xFFD6, "\341\205\261"},
    {0xFFD7, "\341\205\262"},
    {0xFFDA, "\341\205\263"},
    {0xFFDB, "\341\205\264"},
    {0xFFDC, "\341\205\265"},
    {0xFFE0, "\302\242"},
    {0xFFE1, "\302\243"},
    {0xFFE2, "\302\254"},
    {0xFFE3, " \314\204"},
    {0xFFE4, "\302\246"},
    {0xFFE5, "\302\245"},
    {0xFFE6, "\342\202\251"},
    {0xFFE8, "\342\224\202"},
    {0xFFE9, "\342\206\220"},
    {0xFFEA, "\342\206\221"},
    {0xFFEB, "\342\206\222"},
    {0xFFEC, "\342\206\223"},
    {0xFFED, "\342\226\240"},
    {0xFFEE, "\342\227\213"},
    {0x10400, "\360\220\220\250"},
    {0x10401, "\360\220\220\251"},
    {0x10402, "\360\220\220\252"},
    {0x10403, "\360\220\220\253"},
    {0x10404, "\360\220\220\254"},
    {0x10405, "\360\220\220\255"},
    {0x10406, "\360\220\220\256"},
    {0x10407, "\360\220\220\257"},
    {0x10408, "\360\220\220\260"},
    {0x10409, "\360\220\220\261"},
    {0x1040A, "\360\220\220\262"},
    {0x1040B, "\360\220\220\263"},
    {0x1040C, "\360\220\220\264"},
    {0x1040D, "\360\220\220\265"},
    {0x1040E, "\360\220\220\266"},
    {0x1040F, "\360\220\220\267"},
    {0x10410, "\360\220\220\270"},
    {0x10411, "\360\220\220\271"},
    {0x10412, "\360\220\220\272"},
    {0x10413, "\360\220\220\273"},
    {0x10414, "\360\220\220\274"},
    {0x10415, "\360\220\220\275"},
    {0x10416, "\360\220\220\276"},
    {0x10417, "\360\220\220\277"},
    {0x10418, "\360\220\221\200"},
    {0x10419, "\360\220\221\201"},
    {0x1041A, "\360\220\221\202"},
    {0x1041B, "\360\220\221\203"},
    {0x1041C, "\360\220\221\204"},
    {0x1041D, "\360\220\221\205"},
    {0x1041E, "\360\220\221\206"},
    {0x1041F, "\360\220\221\207"},
    {0x10420, "\360\220\221\210"},
    {0x10421, "\360\220\221\211"},
    {0x10422, "\360\220\221\212"},
    {0x10423, "\360\220\221\213"},
    {0x10424, "\360\220\221\214"},
    {0x10425, "\360\220\221\215"},
    {0x10426, "\360\220\221\216"},
    {0x10427, "\360\220\221\217"},
    {0x104B0, "\360\220\223\230"},
    {0x104B1, "\360\220\223\231"},
    {0x104B2, "\360\220\223\232"},
    {0x104B3, "\360\220\223\233"},
    {0x104B4, "\360\220\223\234"},
    {0x104B5, "\360\220\223\235"},
    {0x104B6, "\360\220\223\236"},
    {0x104B7, "\360\220\223\237"},
    {0x104B8, "\360\220\223\240"},
    {0x104B9, "\360\220\223\241"},
    {0x104BA, "\360\220\223\242"},
    {0x104BB, "\360\220\223\243"},
    {0x104BC, "\360\220\223\244"},
    {0x104BD, "\360\220\223\245"},
    {0x104BE, "\360\220\223\246"},
    {0x104BF, "\360\220\223\247"},
    {0x104C0, "\360\220\223\250"},
    {0x104C1, "\360\220\223\251"},
    {0x104C2, "\360\220\223\252"},
    {0x104C3, "\360\220\223\253"},
    {0x104C4, "\360\220\223\254"},
    {0x104C5, "\360\220\223\255"},
    {0x104C6, "\360\220\223\256"},
    {0x104C7, "\360\220\223\257"},
    {0x104C8, "\360\220\223\260"},
    {0x104C9, "\360\220\223\261"},
    {0x104CA, "\360\220\223\262"},
    {0x104CB, "\360\220\223\263"},
    {0x104CC, "\360\220\223\264"},
    {0x104CD, "\360\220\223\265"},
    {0x104CE, "\360\220\223\266"},
    {0x104CF, "\360\220\223\267"},
    {0x104D0, "\360\220\223\270"},
    {0x104D1, "\360\220\223\271"},
    {0x104D2, "\360\220\223\272"},
    {0x104D3, "\360\220\223\273"},
    {0x10C80, "\360\220\263\200"},
    {0x10C81, "\360\220\263\201"},
    {0x10C82, "\360\220\263\202"},
    {0x10C83, "\360\220\263\203"},
    {0x10C84, "\360\220\263\204"},
    {0x10C85, "\360\220\263\205"},
    {0x10C86, "\360\220\263\206"},
    {0x10C87, "\360\220\263\207"},
    {0x10C88, "\360\220\263\210"},
    {0x10C89, "\360\220\263\211"},
    {0x10C8A, "\360\220\263\212"},
    {0x10C8B, "\360\220\263\213"},
    {0x10C8C, "\360\220\263\214"},
    {0x10C8D, "\360\220\263\215"},
    {0x10C8E, "\360\220\263\216"},
    {0x10C8F, "\360\220\263\217"},
    {0x10C90, "\360\220\263\220"},
    {0x10C91, "\360\220\263\221"},
    {0x10C92, "\360\220\263\222"},
    {0x10C93, "\360\220\263\223"},
    {0x10C94, "\360\220\263\224"},
    {0x10C95, "\360\220\263\225"},
    {0x10C96, "\360\220\263\226"},
    {0x10C97, "\360\220\263\227"},
    {0x10C98, "\360\220\263\230"},
    {0x10C99, "\360\220\263\231"},
    {0x10C9A, "\360\220\263\232"},
    {0x10C9B, "\360\220\263\233"},
    {0x10C9C, "\360\220\263\234"},
    {0x10C9D, "\360\220\263\235"},
    {0x10C9E, "\360\220\263\236"},
    {0x10C9F, "\360\220\263\237"},
    {0x10CA0, "\360\220\263\240"},
    {0x10CA1, "\360\220\263\241"},
    {0x10CA2, "\360\220\263\242"},
    {0x10CA3, "\360\220\263\243"},
    {0x10CA4, "\360\220\263\244"},
    {0x10CA5, "\360\220\263\245"},
    {0x10CA6, "\360\220\263\246"},
    {0x10CA7, "\360\220\263\247"},
    {0x10CA8, "\360\220\263\250"},
    {0x10CA9, "\360\220\263\251"},
    {0x10CAA, "\360\220\263\252"},
    {0x10CAB, "\360\220\263\253"},
    {0x10CAC, "\360\220\263\254"},
    {0x10CAD, "\360\220\263\255"},
    {0x10CAE, "\360\220\263\256"},
    {0x10CAF, "\360\220\263\257"},
    {0x10CB0, "\360\220\263\260"},
    {0x10CB1, "\360\220\263\261"},
    {0x10CB2, "\360\220\263\262"},
    {0x118A0, "\360\221\243\200"},
    {0x118A1, "\360\221\243\201"},
    {0x118A2, "\360\221\243\202"},
    {0x118A3, "\360\221\243\203"},
    {0x118A4, "\360\221\243\204"},
    {0x118A5, "\360\221\243\205"},
    {0x118A6, "\360\221\243\206"},
    {0x118A7, "\360\221\243\207"},
    {0x118A8, "\360\221\243\210"},
    {0x118A9, "\360\221\243\211"},
    {0x118AA, "\360\221\243\212"},
    {0x118AB, "\360\221\243\213"},
    {0x118AC, "\360\221\243\214"},
    {0x118AD, "\360\221\243\215"},
    {0x118AE, "\360\221\243\216"},
    {0x118AF, "\360\221\243\217"},
    {0x118B0, "\360\221\243\220"},
    {0x118B1, "\360\221\243\221"},
    {0x118B2, "\360\221\243\222"},
    {0x118B3, "\360\221\243\223"},
    {0x118B4, "\360\221\243\224"},
    {0x118B5, "\360\221\243\225"},
    {0x118B6, "\360\221\243\226"},
    {0x118B7, "\360\221\243\227"},
    {0x118B8, "\360\221\243\230"},
    {0x118B9, "\360\221\243\231"},
    {0x118BA, "\360\221\243\232"},
    {0x118BB, "\360\221\243\233"},
    {0x118BC, "\360\221\243\234"},
    {0x118BD, "\360\221\243\235"},
    {0x118BE, "\360\221\243\236"},
    {0x118BF, "\360\221\243\237"},
    {0x16E40, "\360\226\271\240"},
    {0x16E41, "\360\226\271\241"},
    {0x16E42, "\360\226\271\242"},
    {0x16E43, "\360\226\271\243"},
    {0x16E44, "\360\226\271\244"},
    {0x16E45, "\360\226\271\245"},
    {0x16E46, "\360\226\271\246"},
    {0x16E47, "\360\226\271\247"},
    {0x16E48, "\360\226\271\250"},
    {0x16E49, "\360\226\271\251"},
    {0x16E4A, "\360\226\271\252"},
    {0x16E4B, "\360\226\271\253"},
    {0x16E4C, "\360\226\271\254"},
    {0x16E4D, "\360\226\271\255"},
    {0x16E4E, "\360\226\271\256"},
    {0x16E4F, "\360\226\271\257"},
    {0x16E50, "\360\226\271\260"},
    {0x16E51, "\360\226\271\261"},
    {0x16E52, "\360\226\271\262"},
    {0x16E53, "\360\226\271\263"},
    {0x16E54, "\360\226\271\264"},
    {0x16E55, "\360\226\271\265"},
    {0x16E56, "\360\226\271\266"},
    {0x16E57, "\360\226\271\267"},
    {0x16E58, "\360\226\271\270"},
    {0x16E59, "\360\226\271\271"},
    {0x16E5A, "\360\226\271\272"},
    {0x16E5B, "\360\226\271\273"},
    {0x16E5C, "\360\226\271\274"},
    {0x16E5D, "\360\226\271\275"},
    {0x16E5E, "\360\226\271\276"},
    {0x16E5F, "\360\226\271\277"},
    {0x1D15E, "\360\235\205\227\360\235\205\245"},
    {0x1D15F, "\360\235\205\230\360\235\205\245"},
    {0x1D160, "\360\235\205\230\360\235\205\245\360\235\205\256"},
    {0x1D161, "\360\235\205\230\360\235\205\245\360\235\205\257"},
    {0x1D162, "\360\235\205\230\360\235\205\245\360\235\205\260"},
    {0x1D163, "\360\235\205\230\360\235\205\245\360\235\205\261"},
    {0x1D164, "\360\235\205\230\360\235\205\245\360\235\205\262"},
    {0x1D1BB, "\360\235\206\271\360\235\205\245"},
    {0x1D1BC, "\360\235\206\272\360\235\205\245"},
    {0x1D1BD, "\360\235\206\271\360\235\205\245\360\235\205\256"},
    {0x1D1BE, "\360\235\206\272\360\235\205\245\360\235\205\256"},
    {0x1D1BF, "\360\235\206\271\360\235\205\245\360\235\205\257"},
    {0x1D1C0, "\360\235\206\272\360\235\205\245\360\235\205\257"},
    {0x1D400, "a"},
    {0x1D401, "b"},
    {0x1D402, "c"},
    {0x1D403, "d"},
    {0x1D404, "e"},
    {0x1D405, "f"},
    {0x1D406, "g"},
    {0x1D407, "h"},
    {0x1D408, "i"},
    {0x1D409, "j"},
    {0x1D40A, "k"},
    {0x1D40B, "l"},
    {0x1D40C, "m"},
    {0x1D40D, "n"},
    {0x1D40E, "o"},
    {0x1D40F, "p"},
    {0x1D410, "q"},
    {0x1D411, "r"},
    {0x1D412, "s"},
    {0x1D413, "t"},
    {0x1D414, "u"},
    {0x1D415, "v"},
    {0x1D416, "w"},
    {0x1D417, "x"},
    {0x1D418, "y"},
    {0x1D419, "z"},
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
    {0x1D434, "a"},
    {0x1D435, "b"},
    {0x1D436, "c"},
    {0x1D437, "d"},
    {0x1D438, "e"},
    {0x1D439, "f"},
    {0x1D43A, "g"},
    {0x1D43B, "h"},
    {0x1D43C, "i"},
    {0x1D43D, "j"},
    {0x1D43E, "k"},
    {0x1D43F, "l"},
    {0x1D440, "m"},
    {0x1D441, "n"},
    {0x1D442, "o"},
    {0x1D443, "p"},
    {0x1D444, "q"},
    {0x1D445, "r"},
    {0x1D446, "s"},
    {0x1D447, "t"},
    {0x1D448, "u"},
    {0x1D449, "v"},
    {0x1D44A, "w"},
    {0x1D44B, "x"},
    {0x1D44C, "y"},
    {0x1D44D, "z"},
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
    {0x1D468, "a"},
    {0x1D469, "b"},
    {0x1D46A, "c"},
    {0x1D46B, "d"},
    {0x1D46C, "e"},
    {0x1D46D, "f"},
    {0x1D46E, "g"},
    {0x1D46F, "h"},
    {0x1D470, "i"},
    {0x1D471, "j"},
    {0x1D472, "k"},
    {0x1D473, "l"},
    {0x1D474, "m"},
    {0x1D475, "n"},
    {0x1D476, "o"},
    {0x1D477, "p"},
    {0x1D478, "q"},
    {0x1D479, "r"},
    {0x1D47A, "s"},
    {0x1D47B, "t"},
    {0x1D47C, "u"},
    {0x1D47D, "v"},
    {0x1D47E, "w"},
    {0x1D47F, "x"},
    {0x1D480, "y"},
    {0x1D481, "z"},
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
    {0x1D49C, "a"},
    {0x1D49E, "c"},
    {0x1D49F, "d"},
    {0x1D4A2, "g"},
    {0x1D4A5, "j"},
    {0x1D4A6, "k"},
    {0x1D4A9, "n"},
    {0x1D4AA, "o"},
    {0x1D4AB, "p"},
    {0x1D4AC, "q"},
    {0x1D4AE, "s"},
    {0x1D4AF, "t"},
    {0x1D4B0, "u"},
    {0x1D4B1, "v"},
    {0x1D4B2, "w"},
    {0x1D4B3, "x"},
    {0x1D4B4, "y"},
    {0x1D4B5, "z"},
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
    {0x1D4D0, "a"},
    {0x1D4D1, "b"},
    {0x1D4D2, "c"},
    {0x1D4D3, "d"},
    {0x1D4D4, "e"},
    {0x1D4D5, "f"},
    {0x1D4D6, "g"},
    {0x1D4D7, "h"},
    {0x1D4D8, "i"},
    {0x1D4D9, "j"},
    {0x1D4DA, "k"},
    {0x1D4DB, "l"},
    {0x1D4DC, "m"},
    {0x1D4DD, "n"},
    {0x1D4DE, "o"},
    {0x1D4DF, "p"},
    {0x1D4E0, "q"},
    {0x1D4E1, "r"},
    {0x1D4E2, "s"},
    {0x1D4E3, "t"},
    {0x1D4E4, "u"},
    {0x1D4E5, "v"},
    {0x1D4E6, "w"},
    {0x1D4E7, "x"},
    {0x1D4E8, "y"},
    {0x1D4E9, "z"},
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
    {0x1D504, "a"},
    {0x1D505, "b"},
    {0x1D507, "d"},
    {0x1D508, "e"},
    {0x1D509, "f"},
    {0x1D50A, "g"},
    {0x1D50D, "j"},
    {0x1D50E, "k"},
    {0x1D50F, "l"},
    {0x1D510, "m"},
    {0x1D511, "n"},
    {0x1D512, "o"},
    {0x1D513, "p"},
    {0x1D514, "q"},
    {0x1D516, "s"},
    {0x1D517, "t"},
    {0x1D518, "u"},
    {0x1D519, "v"},
    {0x1D51A, "w"},
    {0x1D51B, "x"},
    {0x1D51C, "y"},
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
    {0x1D538, "a"},
    {0x1D539, "b"},
    {0x1D53B, "d"},
    {0x1D53C, "e"},
    {0x1D53D, "f"},
    {0x1D53E, "g"},
    {0x1D540, "i"},
    {0x1D541, "j"},
    {0x1D542, "k"},
    {0x1D543, "l"},
    {0x1D544, "m"},
    {0x1D546, "o"},
    {0x1D54A, "s"},
    {0x1D54B, "t"},
    {0x1D54C, "u"},
    {0x1D54D, "v"},
    {0x1D54E, "w"},
    {0x1D54F, "x"},
    {0x1D550, "y"},
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
    {0x1D56C, "a"},
    {0x1D56D, "b"},
    {0x1D56E, "c"},
    {0x1D56F, "d"},
    {0x1D570, "e"},
    {0x1D571, "f"},
    {0x1D572, "g"},
    {0x1D573, "h"},
    {0x1D574, "i"},
    {0x1D575, "j"},
    {0x1D576, "k"},
    {0x1D577, "l"},
    {0x1D578, "m"},
    {0x1D579, "n"},
    {0x1D57A, "o"},
    {0x1D57B, "p"},
    {0x1D57C, "q"},
    {0x1D57D, "r"},
    {0x1D57E, "s"},
    {0x1D57F, "t"},
    {0x1D580, "u"},
    {0x1D581, "v"},
    {0x1D582, "w"},
    {0x1D583, "x"},
    {0x1D584, "y"},
    {0x1D585, "z"},
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
    {0x1D5A0, "a"},
    {0x1D5A1, "b"},
    {0x1D5A2, "c"},
    {0x1D5A3, "d"},
    {0x1D5A4, "e"},
    {0x1D5A5, "f"},
    {0x1D5A6, "g"},
    {0x1D5A7, "h"},
    {0x1D5A8, "i"},
    {0x1D5A9, "j"},
    {0x1D5AA, "k"},
    {0x1D5AB, "l"},
    {0x1D5AC, "m"},
    {0x1D5AD, "n"},
    {0x1D5AE, "o"},
    {0x1D5AF, "p"},
    {0x1D5B0, "q"},
    {0x1D5B1, "r"},
    {0x1D5B2, "s"},
    {0x1D5B3, "t"},
    {0x1D5B4, "u"},
    {0x1D5B5, "v"},
    {0x1D5B6, "w"},
    {0x1D5B7, "x"},
    {0x1D5B8, "y"},
    {0x1D5B9, "z"},
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
    {0x1D5D4, "a"},
    {0x1D5D5, "b"},
    {0x1D5D6, "c"},
    {0x1D5D7, "d"},
    {0x1D5D8, "e"},
    {0x1D5D9, "f"},
    {0x1D5DA, "g"},
    {0x1D5DB, "h"},
    {0x1D5DC, "i"},
    {0x1D5DD, "j"},
    {0x1D5DE, "k"},
    {0x1D5DF, "l"},
    {0x1D5E0, "m"},
    {0x1D5E1, "n"},
    {0x1D5E2, "o"},
    {0x1D5E3, "p"},
    {0x1D5E4, "q"},
    {0x1D5E5, "r"},
    {0x1D5E6, "s"},
    {0x1D5E7, "t"},
    {0x1D5E8, "u"},
    {0x1D5E9, "v"},
    {0x1D5EA, "w"},
    {0x1D5EB, "x"},
    {0x1D5EC, "y"},
    {0x1D5ED, "z"},
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
    {0x1D608, "a"},
    {0x1D609, "b"},
    {0x1D60A, "c"},
    {0x1D60B, "d"},
    {0x1D60C, "e"},
    {0x1D60D, "f"},
    {0x1D60E, "g"},
    {0x1D60F, "h"},
    {0x1D610, "i"},
    {0x1D611, "j"},
    {0x1D612, "k"},
    {0x1D613, "l"},
    {0x1D614, "m"},
    {0x1D615, "n"},
    {0x1D616, "o"},
    {0x1D617, "p"},
    {0x1D618, "q"},
    {0x1D619, "r"},
    {0x1D61A, "s"},
    {0x1D61B, "t"},
    {0x1D61C, "u"},
    {0x1D61D, "v"},
    {0x1D61E, "w"},
    {0x1D61F, "x"},
    {0x1D620, "y"},
    {0x1D621, "z"},
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
    {0x1D63C, "a"},
    {0x1D63D, "b"},
    {0x1D63E, "c"},
    {0x1D63F, "d"},
    {0x1D640, "e"},
    {0x1D641, "f"},
    {0x1D642, "g"},
    {0x1D643, "h"},
    {0x1D644, "i"},
    {0x1D645, "j"},
    {0x1D646, "k"},
    {0x1D647, "l"},
    {0x1D648, "m"},
    {0x1D649, "n"},
    {0x1D64A, "o"},
    {0x1D64B, "p"},
    {0x1D64C, "q"},
    {0x1D64D, "r"},
    {0x1D64E, "s"},
    {0x1D64F, "t"},
    {0x1D650, "u"},
    {0x1D651, "v"},
    {0x1D652, "w"},
    {0x1D653, "x"},
    {0x1D654, "y"},
    {0x1D655, "z"},
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
    {0x1D670, "a"},
    {0x1D671, "b"},
    {0x1D672, "c"},
    {0x1D673, "d"},
    {0x1D674, "e"},
    {0x1D675, "f"},
    {0x1D676, "g"},
    {0x1D677, "h"},
    {0x1D678, "i"},
    {0x1D679, "j"},
    {0x1D67A, "k"},
    {0x1D67B, "l"},
    {0x1D67C, "m"},
    {0x1D67D, "n"},
    {0x1D67E, "o"},
    {0x1D67F, "p"},
    {0x1D680, "q"},
    {0x1D681, "r"},
    {0x1D682, "s"},
    {0x1D683, "t"},
    {0x1D684, "u"},
    {0x1D685, "v"},
    {0x1D686, "w"},
    {0x1D687, "x"},
    {0x1D688, "y"},
    {0x1D689, "z"},
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
    {0x1D6A4, "\304\261"},
    {0x1D6A5, "\310\267"},
    {0x1D6A8, "\316\261"},
    {0x1D6A9, "\316\262"},
    {0x1D6AA, "\316\263"},
    {0x1D6AB, "\316\264"},
    {0x1D6AC, "\316\265"},
    {0x1D6AD, "\316\266"},
    {0x1D6AE, "\316\267"},
    {0x1D6AF, "\316\270"},
    {0x1D6B0, "\316\271"},
    {0x1D6B1, "\316\272"},
    {0x1D6B2, "\316\273"},
    {0x1D6B3, "\316\274"},
    {0x1D6B4, "\316\275"},
    {0x1D6B5, "\316\276"},
    {0x1D6B6, "\316\277"},
    {0x1D6B7, "\317\200"},
    {0x1D6B8, "\317\201"},
    {0x1D6B9, "\316\270"},
    {0x1D6BA, "\317\203"},
    {0x1D6BB, "\317\204"},
    {0x1D6BC, "\317\205"},
    {0x1D6BD, "\317\206"},
    {0x1D6BE, "\317\207"},
    {0x1D6BF, "\317\210"},
    {0x1D6C0, "\317\211"},
    {0x1D6C1, "\342\210\207"},
    {0x1D6C2, "\316\261"},
    {0x1D6C3, "\316\262"},
    {0x1D6C4, "\316\263"},
    {0x1D6C5, "\316\264"},
    {0x1D6C6, "\316\265"},
    {0x1D6C7, "\316\266"},
    {0x1D6C8, "\316\267"},
    {0x1D6C9, "\316\270"},
    {0x1D6CA, "\316\271"},
    {0x1D6CB, "\316\272"},
    {0x1D6CC, "\316\273"},
    {0x1D6CD, "\316\274"},
    {0x1D6CE, "\316\275"},
    {0x1D6CF, "\316\276"},
    {0x1D6D0, "\316\277"},
    {0x1D6D1, "\317\200"},
    {0x1D6D2, "\317\201"},
    {0x1D6D3, "\317\202"},
    {0x1D6D4, "\317\203"},
    {0x1D6D5, "\317\204"},
    {0x1D6D6, "\317\205"},
    {0x1D6D7, "\317\206"},
    {0x1D6D8, "\317\207"},
    {0x1D6D9, "\317\210"},
    {0x1D6DA, "\317\211"},
    {0x1D6DB, "\342\210\202"},
    {0x1D6DC, "\316\265"},
    {0x1D6DD, "\316\270"},
    {0x1D6DE, "\316\272"},
    {0x1D6DF, "\317\206"},
    {0x1D6E0, "\317\201"},
    {0x1D6E1, "\317\200"},
    {0x1D6E2, "\316\261"},
    {0x1D6E3, "\316\262"},
    {0x1D6E4, "\316\263"},
    {0x1D6E5, "\316\264"},
    {0x1D6E6, "\316\265"},
    {0x1D6E7, "\316\266"},
    {0x1D6E8, "\316\267"},
    {0x1D6E9, "\316\270"},
    {0x1D6EA, "\316\271"},
    {0x1D6EB, "\316\272"},
    {0x1D6EC, "\316\273"},
    {0x1D6ED, "\316\274"},
    {0x1D6EE, "\316\275"},
    {0x1D6EF, "\316\276"},
    {0x1D6F0, "\316\277"},
    {0x1D6F1, "\317\200"},
    {0x1D6F2, "\317\201"},
    {0x1D6F3, "\316\270"},
    {0x1D6F4, "\317\203"},
    {0x1D6F5, "\317\204"},
    {0x1D6F6, "\317\205"},
    {0x1D6F7, "\317\206"},
    {0x1D6F8, "\317\207"},
    {0x1D6F9, "\317\210"},
    {0x1D6FA, "\317\211"},
    {0x1D6FB, "\342\210\207"},
    {0x1D6FC, "\316\261"},
    {0x1D6FD, "\316\262"},
    {0x1D6FE, "\316\263"},
    {0x1D6FF, "\316\264"},
    {0x1D700, "\316\265"},
    {0x1D701, "\316\266"},
    {0x1D702, "\316\267"},
    {0x1D703, "\316\270"},
    {0x1D704, "\316\271"},
    {0x1D705, "\316\272"},
    {0x1D706, "\316\273"},
    {0x1D707, "\316\274"},
    {0x1D708, "\316\275"},
    {0x1D709, "\316\276"},
    {0x1D70A, "\316\277"},
    {0x1D70B, "\317\200"},
    {0x1D70C, "\317\201"},
    {0x1D70D, "\317\202"},
    {0x1D70E, "\317\203"},
    {0x1D70F, "\317\204"},
    {0x1D710, "\317\205"},
    {0x1D711, "\317\206"},
    {0x1D712, "\317\207"},
    {0x1D713, "\317\210"},
    {0x1D714, "\317\211"},
    {0x1D715, "\342\210\202"},
    {0x1D716, "\316\265"},
    {0x1D717, "\316\270"},
    {0x1D718, "\316\272"},
    {0x1D719, "\317\206"},
    {0x1D71A, "\317\201"},
    {0x1D71B, "\317\200"},
    {0x1D71C, "\316\261"},
    {0x1D71D, "\316\262"},
    {0x1D71E, "\316\263"},
    {0x1D71F, "\316\264"},
    {0x1D720, "\316\265"},
    {0x1D721, "\316\266"},
    {0x1D722, "\316\267"},
    {0x1D723, "\316\270"},
    {0x1D724, "\316\271"},
    {0x1D725, "\316\272"},
    {0x1D726, "\316\273"},
    {0x1D727, "\316\274"},
    {0x1D728, "\316\275"},
    {0x1D729, "\316\276"},
    {0x1D72A, "\316\277"},
    {0x1D72B, "\317\200"},
    {0x1D72C, "\317\201"},
    {0x1D72D, "\316\270"},
    {0x1D72E, "\317\203"},
    {0x1D72F, "\317\204"},
    {0x1D730, "\317\205"},
    {0x1D731, "\317\206"},
    {0x1D732, "\317\207"},
    {0x1D733, "\317\210"},
    {0x1D734, "\317\211"},
    {0x1D735, "\342\210\207"},
    {0x1D736, "\316\261"},
    {0x1D737, "\316\262"},
    {0x1D738, "\316\263"},
    {0x1D739, "\316\264"},
    {0x1D73A, "\316\265"},
    {0x1D73B, "\316\266"},
    {0x1D73C, "\316\267"},
    {0x1D73D, "\316\270"},
    {0x1D73E, "\316\271"},
    {0x1D73F, "\316\272"},
    {0x1D740, "\316\273"},
    {0x1D741, "\316\274"},
    {0x1D742, "\316\275"},
    {0x1D743, "\316\276"},
    {0x1D744, "\316\277"},
    {0x1D745, "\317\200"},
    {0x1D746, "\317\201"},
    {0x1D747, "\317\202"},
    {0x1D748, "\317\203"},
    {0x1D749, "\317\204"},
    {0x1D74A, "\317\205"},
    {0x1D74B, "\317\206"},
    {0x1D74C, "\317\207"},
    {0x1D74D, "\317\210"},
    {0x1D74E, "\317\211"},
    {0x1D74F, "\342\210\202"},
    {0x1D750, "\316\265"},
    {0x1D751, "\316\270"},
    {0x1D752, "\316\272"},
    {0x1D753, "\317\206"},
    {0x1D754, "\317\201"},
    {0x1D755, "\317\200"},
    {0x1D756, "\316\261"},
    {0x1D757, "\316\262"},
    {0x1D758, "\316\263"},
    {0x1D759, "\316\264"},
    {0x1D75A, "\316\265"},
    {0x1D75B, "\316\266"},
    {0x1D75C, "\316\267"},
    {0x1D75D, "\316\270"},
    {0x1D75E, "\316\271"},
    {0x1D75F, "\316\272"},
    {0x1D760, "\316\273"},
    {0x1D761, "\316\274"},
    {0x1D762, "\316\275"},
    {0x1D763, "\316\276"},
    {0x1D764, "\316\277"},
    {0x1D765, "\317\200"},
    {0x1D766, "\317\201"},
    {0x1D767, "\316\270"},
    {0x1D768, "\317\203"},
    {0x1D769, "\317\204"},
    {0x1D76A, "\317\205"},
    {0x1D76B, "\317\206"},
    {0x1D76C, "\317\207"},
    {0x1D76D, "\317\210"},
    {0x1D76E, "\317\211"},
    {0x1D76F, "\342\210\207"},
    {0x1D770, "\316\261"},
    {0x1D771, "\316\262"},
    {0x1D772, "\316\263"},
    {0x1D773, "\316\264"},
    {0x1D774, "\316\265"},
    {0x1D775, "\316\266"},
    {0x1D776, "\316\267"},
    {0x1D777, "\316\270"},
    {0x1D778, "\316\271"},
    {0x1D779, "\316\272"},
    {0x1D77A, "\316\273"},
    {0x1D77B, "\316\274"},
    {0x1D77C, "\316\275"},
    {0x1D77D, "\316\276"},
    {0x1D77E, "\316\277"},
    {0x1D77F, "\317\200"},
    {0x1D780, "\317\201"},
    {0x1D781, "\317\202"},
    {0x1D782, "\317\203"},
    {0x1D783, "\317\204"},
    {0x1D784, "\317\205"},
    {0x1D785, "\317\206"},
    {0x1D786, "\317\207"},
    {0x1D787, "\317\210"},
    {0x1D788, "\317\211"},
    {0x1D789, "\342\210\202"},
    {0x1D78A, "\316\265"},
    {0x1D78B, "\316\270"},
    {0x1D78C, "\316\272"},
    {0x1D78D, "\317\206"},
    {0x1D78E, "\317\201"},
    {0x1D78F, "\317\200"},
    {0x1D790, "\316\261"},
    {0x1D791, "\316\262"},
    {0x1D792, "\316\263"},
    {0x1D793, "\316\264"},
    {0x1D794, "\316\265"},
    {0x1D795, "\316\266"},
    {0x1D796, "\316\267"},
    {0x1D797, "\316\270"},
    {0x1D798, "\316\271"},
    {0x1D799, "\316\272"},
    {0x1D79A, "\316\273"},
    {0x1D79B, "\316\274"},
    {0x1D79C, "\316\275"},
    {0x1D79D, "\316\276"},
    {0x1D79E, "\316\277"},
    {0x1D79F, "\317\200"},
    {0x1D7A0, "\317\201"},
    {0x1D7A1, "\316\270"},
    {0x1D7A2, "\317\203"},
    {0x1D7A3, "\317\204"},
    {0x1D7A4, "\317\205"},
    {0x1D7A5, "\317\206"},
    {0x1D7A6, "\317\207"},
    {0x1D7A7, "\317\210"},
    {0x1D7A8, "\317\211"},
    {0x1D7A9, "\342\210\207"},
    {0x1D7AA, "\316\261"},
    {0x1D7AB, "\316\262"},
    {0x1D7AC, "\316\263"},
    {0x1D7AD, "\316\264"},
    {0x1D7AE, "\316\265"},
    {0x1D7AF, "\316\266"},
    {0x1D7B0, "\316\267"},
    {0x1D7B1, "\316\270"},
    {0x1D7B2, "\316\271"},
    {0x1D7B3, "\316\272"},
    {0x1D7B4, "\316\273"},
    {0x1D7B5, "\316\274"},
    {0x1D7B6, "\316\275"},
    {0x1D7B7, "\316\276"},
    {0x1D7B8, "\316\277"},
    {0x1D7B9, "\317\200"},
    {0x1D7BA, "\317\201"},
    {0x1D7BB, "\317\202"},
    {0x1D7BC, "\317\203"},
    {0x1D7BD, "\317\204"},
    {0x1D7BE, "\317\205"},
    {0x1D7BF, "\317\206"},
    {0x1D7C0, "\317\207"},
    {0x1D7C1, "\317\210"},
    {0x1D7C2, "\317\211"},
    {0x1D7C3, "\342\210\202"},
    {0x1D7C4, "\316\265"},
    {0x1D7C5, "\316\270"},
    {0x1D7C6, "\316\272"},
    {0x1D7C7, "\317\206"},
    {0x1D7C8, "\317\201"},
    {0x1D7C9, "\317\200"},
    {0x1D7CA, "\317\235"},
    {0x1D7CB, "\317\235"},
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
    {0x1E900, "\360\236\244\242"},
    {0x1E901, "\360\236\244\243"},
    {0x1E902, "\360\236\244\244"},
    {0x1E903, "\360\236\244\245"},
    {0x1E904, "\360\236\244\246"},
    {0x1E905, "\360\236\244\247"},
    {0x1E906, "\360\236\244\250"},
    {0x1E907, "\360\236\244\251"},
    {0x1E908, "\360\236\244\252"},
    {0x1E909, "\360\236\244\253"},
    {0x1E90A, "\360\236\244\254"},
    {0x1E90B, "\360\236\244\255"},
    {0x1E90C, "\360\236\244\256"},
    {0x1E90D, "\360\236\244\257"},
    {0x1E90E, "\360\236\244\260"},
    {0x1E90F, "\360\236\244\261"},
    {0x1E910, "\360\236\244\262"},
    {0x1E911, "\360\236\244\263"},
    {0x1E912, "\360\236\244\264"},
    {0x1E913, "\360\236\244\265"},
    {0x1E914, "\360\236\244\266"},
    {0x1E915, "\360\236\244\267"},
    {0x1E916, "\360\236\244\270"},
    {0x1E917, "\360\236\244\271"},
    {0x1E918, "\360\236\244\272"},
    {0x1E919, "\360\236\244\273"},
    {0x1E91A, "\360\236\244\274"},
    {0x1E91B, "\360\236\244\275"},
    {0x1E91C, "\360\236\244\276"},
    {0x1E91D, "\360\236\244\277"},
    {0x1E91E, "\360\236\245\200"},
    {0x1E91F, "\360\236\245\201"},
    {0x1E920, "\360\236\245\202"},
    {0x1E921, "\360\236\245\203"},
    {0x1EE00, "\330\247"},
    {0x1EE01, "\330\250"},
    {0x1EE02, "\330\254"},
    {0x1EE03, "\330\257"},
    {0x1EE05, "\331\210"},
    {0x1EE06, "\330\262"},
    {0x1EE07, "\330\255"},
    {0x1EE08, "\330\267"},
    {0x1EE09, "\331\212"},
    {0x1EE0A, "\331\203"},
    {0x1EE0B, "\331\204"},
    {0x1EE0C, "\331\205"},
    {0x1EE0D, "\331\206"},
    {0x1EE0E, "\330\263"},
    {0x1EE0F, "\330\271"},
    {0x1EE10, "\331\201"},
    {0x1EE11, "\330\265"},
    {0x1EE12, "\331\202"},
    {0x1EE13, "\330\261"},
    {0x1EE14, "\330\264"},
    {0x1EE15, "\330\252"},
    {0x1EE16, "\330\253"},
    {0x1EE17, "\330\256"},
    {0x1EE18, "\330\260"},
    {0x1EE19, "\330\266"},
    {0x1EE1A, "\330\270"},
    {0x1EE1B, "\330\272"},
    {0x1EE1C, "\331\256"},
    {0x1EE1D, "\332\272"},
    {0x1EE1E, "\332\241"},
    {0x1EE1F, "\331\257"},
    {0x1EE21, "\330\250"},
    {0x1EE22, "\330\254"},
    {0x1EE24, "\331\207"},
    {0x1EE27, "\330\255"},
    {0x1EE29, "\331\212"},
    {0x1EE2A, "\331\203"},
    {0x1EE2B, "\331\204"},
    {0x1EE2C, "\331\205"},
    {0x1EE2D, "\331\206"},
    {0x1EE2E, "\330\263"},
    {0x1EE2F, "\330\271"},
    {0x1EE30, "\331\201"},
    {0x1EE31, "\330\265"},
    {0x1EE32, "\331\202"},
    {0x1EE34, "\330\264"},
    {0x1EE35, "\330\252"},
    {0x1EE36, "\330\253"},
    {0x1EE37, "\330\256"},
    {0x1EE39, "\330\266"},
    {0x1EE3B, "\330\272"},
    {0x1EE42, "\330\254"},
    {0x1EE47, "\330\255"},
    {0x1EE49, "\331\212"},
    {0x1EE4B, "\331\204"},
    {0x1EE4D, "\331\206"},
    {0x1EE4E, "\330\263"},
    {0x1EE4F, "\330\271"},
    {0x1EE51, "\330\265"},
    {0x1EE52, "\331\202"},
    {0x1EE54, "\330\264"},
    {0x1EE57, "\330\256"},
    {0x1EE59, "\330\266"},
    {0x1EE5B, "\330\272"},
    {0x1EE5D, "\332\272"},
    {0x1EE5F, "\331\257"},
    {0x1EE61, "\330\250"},
    {0x1EE62, "\330\254"},
    {0x1EE64, "\331\207"},
    {0x1EE67, "\330\255"},
    {0x1EE68, "\330\267"},
    {0x1EE69, "\331\212"},
    {0x1EE6A, "\331\203"},
    {0x1EE6C, "\331\205"},
    {0x1EE6D, "\331\206"},
    {0x1EE6E, "\330\263"},
    {0x1EE6F, "\330\271"},
    {0x1EE70, "\331\201"},
    {0x1EE71, "\330\265"},
    {0x1EE72, "\331\202"},
    {0x1EE74, "\330\264"},
    {0x1EE75, "\330\252"},
    {0x1EE76, "\330\253"},
    {0x1EE77, "\330\256"},
    {0x1EE79, "\330\266"},
    {0x1EE7A, "\330\270"},
    {0x1EE7B, "\330\272"},
    {0x1EE7C, "\331\256"},
    {0x1EE7E, "\332\241"},
    {0x1EE80, "\330\247"},
    {0x1EE81, "\330\250"},
    {0x1EE82, "\330\254"},
    {0x1EE83, "\330\257"},
    {0x1EE84, "\331\207"},
    {0x1EE85, "\331\210"},
    {0x1EE86, "\330\262"},
    {0x1EE87, "\330\255"},
    {0x1EE88, "\330\267"},
    {0x1EE89, "\331\212"},
    {0x1EE8B, "\331\204"},
    {0x1EE8C, "\331\205"},
    {0x1EE8D, "\331\206"},
    {0x1EE8E, "\330\263"},
    {0x1EE8F, "\330\271"},
    {0x1EE90, "\331\201"},
    {0x1EE91, "\330\265"},
    {0x1EE92, "\331\202"},
    {0x1EE93, "\330\261"},
    {0x1EE94, "\330\264"},
    {0x1EE95, "\330\252"},
    {0x1EE96, "\330\253"},
    {0x1EE97, "\330\256"},
    {0x1EE98, "\330\260"},
    {0x1EE99, "\330\266"},
    {0x1EE9A, "\330\270"},
    {0x1EE9B, "\330\272"},
    {0x1EEA1, "\330\250"},
    {0x1EEA2, "\330\254"},
    {0x1EEA3, "\330\257"},
    {0x1EEA5, "\331\210"},
    {0x1EEA6, "\330\262"},
    {0x1EEA7, "\330\255"},
    {0x1EEA8, "\330\267"},
    {0x1EEA9, "\331\212"},
    {0x1EEAB, "\331\204"},
    {0x1EEAC, "\331\205"},
    {0x1EEAD, "\331\206"},
    {0x1EEAE, "\330\263"},
    {0x1EEAF, "\330\271"},
    {0x1EEB0, "\331\201"},
    {0x1EEB1, "\330\265"},
    {0x1EEB2, "\331\202"},
    {0x1EEB3, "\330\261"},
    {0x1EEB4, "\330\264"},
    {0x1EEB5, "\330\252"},
    {0x1EEB6, "\330\253"},
    {0x1EEB7, "\330\256"},
    {0x1EEB8, "\330\260"},
    {0x1EEB9, "\330\266"},
    {0x1EEBA, "\330\270"},
    {0x1EEBB, "\330\272"},
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
    {0x1F110, "(a)"},
    {0x1F111, "(b)"},
    {0x1F112, "(c)"},
    {0x1F113, "(d)"},
    {0x1F114, "(e)"},
    {0x1F115, "(f)"},
    {0x1F116, "(g)"},
    {0x1F117, "(h)"},
    {0x1F118, "(i)"},
    {0x1F119, "(j)"},
    {0x1F11A, "(k)"},
    {0x1F11B, "(l)"},
    {0x1F11C, "(m)"},
    {0x1F11D, "(n)"},
    {0x1F11E, "(o)"},
    {0x1F11F, "(p)"},
    {0x1F120, "(q)"},
    {0x1F121, "(r)"},
    {0x1F122, "(s)"},
    {0x1F123, "(t)"},
    {0x1F124, "(u)"},
    {0x1F125, "(v)"},
    {0x1F126, "(w)"},
    {0x1F127, "(x)"},
    {0x1F128, "(y)"},
    {0x1F129, "(z)"},
    {0x1F12A, "\343\200\224s\343\200\225"},
    {0x1F12B, "c"},
    {0x1F12C, "r"},
    {0x1F12D, "cd"},
    {0x1F12E, "wz"},
    {0x1F130, "a"},
    {0x1F131, "b"},
    {0x1F132, "c"},
    {0x1F133, "d"},
    {0x1F134, "e"},
    {0x1F135, "f"},
    {0x1F136, "g"},
    {0x1F137, "h"},
    {0x1F138, "i"},
    {0x1F139, "j"},
    {0x1F13A, "k"},
    {0x1F13B, "l"},
    {0x1F13C, "m"},
    {0x1F13D, "n"},
    {0x1F13E, "o"},
    {0x1F13F, "p"},
    {0x1F140, "q"},
    {0x1F141, "r"},
    {0x1F142, "s"},
    {0x1F143, "t"},
    {0x1F144, "u"},
    {0x1F145, "v"},
    {0x1F146, "w"},
    {0x1F147, "x"},
    {0x1F148, "y"},
    {0x1F149, "z"},
    {0x1F14A, "hv"},
    {0x1F14B, "mv"},
    {0x1F14C, "sd"},
    {0x1F14D, "ss"},
    {0x1F14E, "ppv"},
    {0x1F14F, "wc"},
    {0x1F16A, "mc"},
    {0x1F16B, "md"},
    {0x1F16C, "mr"},
    {0x1F190, "dj"},
    {0x1F200, "\343\201\273\343\201\213"},
    {0x1F201, "\343\202\263\343\202\263"},
    {0x1F202, "\343\202\265"},
    {0x1F210, "\346\211\213"},
    {0x1F211, "\345\255\227"},
    {0x1F212, "\345\217\214"},
    {0x1F213, "\343\203\207"},
    {0x1F214, "\344\272\214"},
    {0x1F215, "\345\244\232"},
    {0x1F216, "\350\247\243"},
    {0x1F217, "\345\244\251"},
    {0x1F218, "\344\272\244"},
    {0x1F219, "\346\230\240"},
    {0x1F21A, "\347\204\241"},
    {0x1F21B, "\346\226\231"},
    {0x1F21C, "\345\211\215"},
    {0x1F21D, "\345\276\214"},
    {0x1F21E, "\345\206\215"},
    {0x1F21F, "\346\226\260"},
    {0x1F220, "\345\210\235"},
    {0x1F221, "\347\265\202"},
    {0x1F222, "\347\224\237"},
    {0x1F223, "\350\262\251"},
    {0x1F224, "\345\243\260"},
    {0x1F225, "\345\220\271"},
    {0x1F226, "\346\274\224"},
    {0x1F227, "\346\212\225"},
    {0x1F228, "\346\215\225"},
    {0x1F229, "\344\270\200"},
    {0x1F22A, "\344\270\211"},
    {0x1F22B, "\351\201\212"},
    {0x1F22C, "\345\267\246"},
    {0x1F22D, "\344\270\255"},
    {0x1F22E, "\345\217\263"},
    {0x1F22F, "\346\214\207"},
    {0x1F230, "\350\265\260"},
    {0x1F231, "\346\211\223"},
    {0x1F232, "\347\246\201"},
    {0x1F233, "\347\251\272"},
    {0x1F234, "\345\220\210"},
    {0x1F235, "\346\272\200"},
    {0x1F236, "\346\234\211"},
    {0x1F237, "\346\234\210"},
    {0x1F238, "\347\224\263"},
    {0x1F239, "\345\211\262"},
    {0x1F23A, "\345\226\266"},
    {0x1F23B, "\351\205\215"},
    {0x1F240, "\343\200\224\346\234\254\343\200\225"},
    {0x1F241, "\343\200\224\344\270\211\343\200\225"},
    {0x1F242, "\343\200\224\344\272\214\343\200\225"},
    {0x1F243, "\343\200\224\345\256\211\343\200\225"},
    {0x1F244, "\343\200\224\347\202\271\343\200\225"},
    {0x1F245, "\343\200\224\346\211\223\343\200\225"},
    {0x1F246, "\343\200\224\347\233\227\343\200\225"},
    {0x1F247, "\343\200\224\345\213\235\343\200\225"},
    {0x1F248, "\343\200\224\346\225\227\343\200\225"},
    {0x1F250, "\345\276\227"},
    {0x1F251, "\345\217\257"},
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
    {0x2F800, "\344\270\275"},
    {0x2F801, "\344\270\270"},
    {0x2F802, "\344\271\201"},
    {0x2F803, "\360\240\204\242"},
    {0x2F804, "\344\275\240"},
    {0x2F805, "\344\276\256"},
    {0x2F806, "\344\276\273"},
    {0x2F807, "\345\200\202"},
    {0x2F808, "\345\201\272"},
    {0x2F809, "\345\202\231"},
    {0x2F80A, "\345\203\247"},
    {0x2F80B, "\345\203\217"},
    {0x2F80C, "\343\222\236"},
    {0x2F80D, "\360\240\230\272"},
    {0x2F80E, "\345\205\215"},
    {0x2F80F, "\345\205\224"},
    {0x2F810, "\345\205\244"},
    {0x2F811, "\345\205\267"},
    {0x2F812, "\360\240\224\234"},
    {0x2F813, "\343\222\271"},
    {0x2F814, "\345\205\247"},
    {0x2F815, "\345\206\215"},
    {0x2F816, "\360\240\225\213"},
    {0x2F817, "\345\206\227"},
    {0x2F818, "\345\206\244"},
    {0x2F819, "\344\273\214"},
    {0x2F81A, "\345\206\254"},
    {0x2F81B, "\345\206\265"},
    {0x2F81C, "\360\251\207\237"},
    {0x2F81D, "\345\207\265"},
    {0x2F81E, "\345\210\203"},
    {0x2F81F, "\343\223\237"},
    {0x2F820, "\345\210\273"},
    {0x2F821, "\345\211\206"},
    {0x2F822, "\345\211\262"},
    {0x2F823, "\345\211\267"},
    {0x2F824, "\343\224\225"},
    {0x2F825, "\345\213\207"},
    {0x2F826, "\345\213\211"},
    {0x2F827, "\345\213\244"},
    {0x2F828, "\345\213\272"},
    {0x2F829, "\345\214\205"},
    {0x2F82A, "\345\214\206"},
    {0x2F82B, "\345\214\227"},
    {0x2F82C, "\345\215\211"},
    {0x2F82D, "\345\215\221"},
    {0x2F82E, "\345\215\232"},
    {0x2F82F, "\345\215\263"},
    {0x2F830, "\345\215\275"},
    {0x2F831, "\345\215\277"},
    {0x2F832, "\345\215\277"},
    {0x2F833, "\345\215\277"},
    {0x2F834, "\360\240\250\254"},
    {0x2F835, "\347\201\260"},
    {0x2F836, "\345\217\212"},
    {0x2F837, "\345\217\237"},
    {0x2F838, "\360\240\255\243"},
    {0x2F839, "\345\217\253"},
    {0x2F83A, "\345\217\261"},
    {0x2F83B, "\345\220\206"},
    {0x2F83C, "\345\222\236"},
    {0x2F83D, "\345\220\270"},
    {0x2F83E, "\345\221\210"},
    {0x2F83F, "\345\221\250"},
    {0x2F840, "\345\222\242"},
    {0x2F841, "\345\223\266"},
    {0x2F842, "\345\224\220"},
    {0x2F843, "\345\225\223"},
    {0x2F844, "\345\225\243"},
    {0x2F845, "\345\226\204"},
    {0x2F846, "\345\226\204"},
    {0x2F847, "\345\226\231"},
    {0x2F848, "\345\226\253"},
    {0x2F849, "\345\226\263"},
    {0x2F84A, "\345\227\202"},
    {0x2F84B, "\345\234\226"},
    {0x2F84C, "\345\230\206"},
    {0x2F84D, "\345\234\227"},
    {0x2F84E, "\345\231\221"},
    {0x2F84F, "\345\231\264"},
    {0x2F850, "\345\210\207"},
    {0x2F851, "\345\243\256"},
    {0x2F852, "\345\237\216"},
    {0x2F853, "\345\237\264"},
    {0x2F854, "\345\240\215"},
    {0x2F855, "\345\236\213"},
    {0x2F856, "\345\240\262"},
    {0x2F857, "\345\240\261"},
    {0x2F858, "\345\242\254"},
    {0x2F859, "\360\241\223\244"},
    {0x2F85A, "\345\243\262"},
    {0x2F85B, "\345\243\267"},
    {0x2F85C, "\345\244\206"},
    {0x2F85D, "\345\244\232"},
    {0x2F85E, "\345\244\242"},
    {0x2F85F, "\345\245\242"},
    {0x2F860, "\360\241\232\250"},
    {0x2F861, "\360\241\233\252"},
    {0x2F862, "\345\247\254"},
    {0x2F863, "\345\250\233"},
    {0x2F864, "\345\250\247"},
    {0x2F865, "\345\247\230"},
    {0x2F866, "\345\251\246"},
    {0x2F867, "\343\233\256"},
    {0x2F868, "\343\233\274"},
    {0x2F869, "\345\254\210"},
    {0x2F86A, "\345\254\276"},
    {0x2F86B, "\345\254\276"},
    {0x2F86C, "\360\241\247\210"},
    {0x2F86D, "\345\257\203"},
    {0x2F86E, "\345\257\230"},
    {0x2F86F, "\345\257\247"},
    {0x2F870, "\345\257\263"},
    {0x2F871, "\360\241\254\230"},
    {0x2F872, "\345\257\277"},
    {0x2F873, "\345\260\206"},
    {0x2F874, "\345\275\223"},
    {0x2F875, "\345\260\242"},
    {0x2F876, "\343\236\201"},
    {0x2F877, "\345\261\240"},
    {0x2F878, "\345\261\256"},
    {0x2F879, "\345\263\200"},
    {0x2F87A, "\345\262\215"},
    {0x2F87B, "\360\241\267\244"},
    {0x2F87C, "\345\265\203"},
    {0x2F87D, "\360\241\267\246"},
    {0x2F87E, "\345\265\256"},
    {0x2F87F, "\345\265\253"},
    {0x2F880, "\345\265\274"},
    {0x2F881, "\345\267\241"},
    {0x2F882, "\345\267\242"},
    {0x2F883, "\343\240\257"},
    {0x2F884, "\345\267\275"},
    {0x2F885, "\345\270\250"},
    {0x2F886, "\345\270\275"},
    {0x2F887, "\345\271\251"},
    {0x2F888, "\343\241\242"},
    {0x2F889, "\360\242\206\203"},
    {0x2F88A, "\343\241\274"},
    {0x2F88B, "\345\272\260"},
    {0x2F88C, "\345\272\263"},
    {0x2F88D, "\345\272\266"},
    {0x2F88E, "\345\273\212"},
    {0x2F88F, "\360\252\216\222"},
    {0x2F890, "\345\273\276"},
    {0x2F891, "\360\242\214\261"},
    {0x2F892, "\360\242\214\261"},
    {0x2F893, "\350\210\201"},
    {0x2F894, "\345\274\242"},
    {0x2F895, "\345\274\242"},
    {0x2F896, "\343\243\207"},
    {0x2F897, "\360\243\212\270"},
    {0x2F898, "\360\246\207\232"},
    {0x2F899, "\345\275\242"},
    {0x2F89A, "\345\275\253"},
    {0x2F89B, "\343\243\243"},
    {0x2F89C, "\345\276\232"},
    {0x2F89D, "\345\277\215"},
    {0x2F89E, "\345\277\227"},
    {0x2F89F, "\345\277\271"},
    {0x2F8A0, "\346\202\201"},
    {0x2F8A1, "\343\244\272"},
    {0x2F8A2, "\343\244\234"},
    {0x2F8A3, "\346\202\224"},
    {0x2F8A4, "\360\242\233\224"},
    {0x2F8A5, "\346\203\207"},
    {0x2F8A6, "\346\205\210"},
    {0x2F8A7, "\346\205\214"},
    {0x2F8A8, "\346\205\216"},
    {0x2F8A9, "\346\205\214"},
    {0x2F8AA, "\346\205\272"},
    {0x2F8AB, "\346\206\216"},
    {0x2F8AC, "\346\206\262"},
    {0x2F8AD, "\346\206\244"},
    {0x2F8AE, "\346\206\257"},
    {0x2F8AF, "\346\207\236"},
    {0x2F8B0, "\346\207\262"},
    {0x2F8B1, "\346\207\266"},
    {0x2F8B2, "\346\210\220"},
    {0x2F8B3, "\346\210\233"},
    {0x2F8B4, "\346\211\235"},
    {0x2F8B5, "\346\212\261"},
    {0x2F8B6, "\346\213\224"},
    {0x2F8B7, "\346\215\220"},
    {0x2F8B8, "\360\242\254\214"},
    {0x2F8B9, "\346\214\275"},
    {0x2F8BA, "\346\213\274"},
    {0x2F8BB, "\346\215\250"},
    {0x2F8BC, "\346\216\203"},
    {0x2F8BD, "\346\217\244"},
    {0x2F8BE, "\360\242\257\261"},
    {0x2F8BF, "\346\220\242"},
    {0x2F8C0, "\346\217\205"},
    {0x2F8C1, "\346\216\251"},
    {0x2F8C2, "\343\250\256"},
    {0x2F8C3, "\346\221\251"},
    {0x2F8C4, "\346\221\276"},
    {0x2F8C5, "\346\222\235"},
    {0x2F8C6, "\346\221\267"},
    {0x2F8C7, "\343\251\254"},
    {0x2F8C8, "\346\225\217"},
    {0x2F8C9, "\346\225\254"},
    {0x2F8CA, "\360\243\200\212"},
    {0x2F8CB, "\346\227\243"},
    {0x2F8CC, "\346\233\270"},
    {0x2F8CD, "\346\231\211"},
    {0x2F8CE, "\343\254\231"},
    {0x2F8CF, "\346\232\221"},
    {0x2F8D0, "\343\254\210"},
    {0x2F8D1, "\343\253\244"},
    {0x2F8D2, "\345\206\222"},
    {0x2F8D3, "\345\206\225"},
    {0x2F8D4, "\346\234\200"},
    {0x2F8D5, "\346\232\234"},
    {0x2F8D6, "\350\202\255"},
    {0x2F8D7, "\344\217\231"},
    {0x2F8D8, "\346\234\227"},
    {0x2F8D9, "\346\234\233"},
    {0x2F8DA, "\346\234\241"},
    {0x2F8DB, "\346\235\236"},
    {0x2F8DC, "\346\235\223"},
    {0x2F8DD, "\360\243\217\203"},
    {0x2F8DE, "\343\255\211"},
    {0x2F8DF, "\346\237\272"},
    {0x2F8E0, "\346\236\205"},
    {0x2F8E1, "\346\241\222"},
    {0x2F8E2, "\346\242\205"},
    {0x2F8E3, "\360\243\221\255"},
    {0x2F8E4, "\346\242\216"},
    {0x2F8E5, "\346\240\237"},
    {0x2F8E6, "\346\244\224"},
    {0x2F8E7, "\343\256\235"},
    {0x2F8E8, "\346\245\202"},
    {0x2F8E9, "\346\246\243"},
    {0x2F8EA, "\346\247\252"},
    {0x2F8EB, "\346\252\250"},
    {0x2F8EC, "\360\243\232\243"},
    {0x2F8ED, "\346\253\233"},
    {0x2F8EE, "\343\260\230"},
    {0x2F8EF, "\346\254\241"},
    {0x2F8F0, "\360\243\242\247"},
    {0x2F8F1, "\346\255\224"},
    {0x2F8F2, "\343\261\216"},
    {0x2F8F3, "\346\255\262"},
    {0x2F8F4, "\346\256\237"},
    {0x2F8F5, "\346\256\272"},
    {0x2F8F6, "\346\256\273"},
    {0x2F8F7, "\360\243\252\215"},
    {0x2F8F8, "\360\241\264\213"},
    {0x2F8F9, "\360\243\253\272"},
    {0x2F8FA, "\346\261\216"},
    {0x2F8FB, "\360\243\262\274"},
    {0x2F8FC, "\346\262\277"},
    {0x2F8FD, "\346\263\215"},
    {0x2F8FE, "\346\261\247"},
    {0x2F8FF, "\346\264\226"},
    {0x2F900, "\346\264\276"},
    {0x2F901, "\346\265\267"},
    {0x2F902, "\346\265\201"},
    {0x2F903, "\346\265\251"},
    {0x2F904, "\346\265\270"},
    {0x2F905, "\346\266\205"},
    {0x2F906, "\360\243\264\236"},
    {0x2F907, "\346\264\264"},
    {0x2F908, "\346\270\257"},
    {0x2F909, "\346\271\256"},
    {0x2F90A, "\343\264\263"},
    {0x2F90B, "\346\273\213"},
    {0x2F90C, "\346\273\207"},
    {0x2F90D, "\360\243\273\221"},
    {0x2F90E, "\346\267\271"},
    {0x2F90F, "\346\275\256"},
    {0x2F910, "\360\243\275\236"},
    {0x2F911, "\360\243\276\216"},
    {0x2F912, "\346\277\206"},
    {0x2F913, "\347\200\271"},
    {0x2F914, "\347\200\236"},
    {0x2F915, "\347\200\233"},
    {0x2F916, "\343\266\226"},
    {0x2F917, "\347\201\212"},
    {0x2F918, "\347\201\275"},
    {0x2F919, "\347\201\267"},
    {0x2F91A, "\347\202\255"},
    {0x2F91B, "\360\240\224\245"},
    {0x2F91C, "\347\205\205"},
    {0x2F91D, "\360\244\211\243"},
    {0x2F91E, "\347\206\234"},
    {0x2F91F, "\360\244\216\253"},
    {0x2F920, "\347\210\250"},
    {0x2F921, "\347\210\265"},
    {0x2F922, "\347\211\220"},
    {0x2F923, "\360\244\230\210"},
    {0x2F924, "\347\212\200"},
    {0x2F925, "\347\212\225"},
    {0x2F926, "\360\244\234\265"},
    {0x2F927, "\360\244\240\224"},
    {0x2F928, "\347\215\272"},
    {0x2F929, "\347\216\213"},
    {0x2F92A, "\343\272\254"},
    {0x2F92B, "\347\216\245"},
    {0x2F92C, "\343\272\270"},
    {0x2F92D, "\343\272\270"},
    {0x2F92E, "\347\221\207"},
    {0x2F92F, "\347\221\234"},
    {0x2F930, "\347\221\261"},
    {0x2F931, "\347\222\205"},
    {0x2F932, "\347\223\212"},
    {0x2F933, "\343\274\233"},
    {0x2F934, "\347\224\244"},
    {0x2F935, "\360\244\260\266"},
    {0x2F936, "\347\224\276"},
    {0x2F937, "\360\244\262\222"},
    {0x2F938, "\347\225\260"},
    {0x2F939, "\360\242\206\237"},
    {0x2F93A, "\347\230\220"},
    {0x2F93B, "\360\244\276\241"},
    {0x2F93C, "\360\244\276\270"},
    {0x2F93D, "\360\245\201\204"},
    {0x2F93E, "\343\277\274"},
    {0x2F93F, "\344\200\210"},
    {0x2F940, "\347\233\264"},
    {0x2F941, "\360\245\203\263"},
    {0x2F942, "\360\245\203\262"},
    {0x2F943, "\360\245\204\231"},
    {0x2F944, "\360\245\204\263"},
    {0x2F945, "\347\234\236"},
    {0x2F946, "\347\234\237"},
    {0x2F947, "\347\234\237"},
    {0x2F948, "\347\235\212"},
    {0x2F949, "\344\200\271"},
    {0x2F94A, "\347\236\213"},
    {0x2F94B, "\344\201\206"},
    {0x2F94C, "\344\202\226"},
    {0x2F94D, "\360\245\220\235"},
    {0x2F94E, "\347\241\216"},
    {0x2F94F, "\347\242\214"},
    {0x2F950, "\347\243\214"},
    {0x2F951, "\344\203\243"},
    {0x2F952, "\360\245\230\246"},
    {0x2F953, "\347\245\226"},
    {0x2F954, "\360\245\232\232"},
    {0x2F955, "\360\245\233\205"},
    {0x2F956, "\347\246\217"},
    {0x2F957, "\347\247\253"},
    {0x2F958, "\344\204\257"},
    {0x2F959, "\347\251\200"},
    {0x2F95A, "\347\251\212"},
    {0x2F95B, "\347\251\217"},
    {0x2F95C, "\360\245\245\274"},
    {0x2F95D, "\360\245\252\247"},
    {0x2F95E, "\360\245\252\247"},
    {0x2F95F, "\347\253\256"},
    {0x2F960, "\344\210\202"},
    {0x2F961, "\360\245\256\253"},
    {0x2F962, "\347\257\206"},
    {0x2F963, "\347\257\211"},
    {0x2F964, "\344\210\247"},
    {0x2F965, "\360\245\262\200"},
    {0x2F966, "\347\263\222"},
    {0x2F967, "\344\212\240"},
    {0x2F968, "\347\263\250"},
    {0x2F969, "\347\263\243"},
    {0x2F96A, "\347\264\200"},
    {0x2F96B, "\360\245\276\206"},
    {0x2F96C, "\347\265\243"},
    {0x2F96D, "\344\214\201"},
    {0x2F96E, "\347\267\207"},
    {0x2F96F, "\347\270\202"},
    {0x2F970, "\347\271\205"},
    {0x2F971, "\344\214\264"},
    {0x2F972, "\360\246\210\250"},
    {0x2F973, "\360\246\211\207"},
    {0x2F974, "\344\215\231"},
    {0x2F975, "\360\246\213\231"},
    {0x2F976, "\347\275\272"},
    {0x2F977, "\360\246\214\276"},
    {0x2F978, "\347\276\225"},
    {0x2F979, "\347\277\272"},
    {0x2F97A, "\350\200\205"},
    {0x2F97B, "\360\246\223\232"},
    {0x2F97C, "\360\246\224\243"},
    {0x2F97D, "\350\201\240"},
    {0x2F97E, "\360\246\226\250"},
    {0x2F97F, "\350\201\260"},
    {0x2F980, "\360\243\215\237"},
    {0x2F981, "\344\217\225"},
    {0x2F982, "\350\202\262"},
    {0x2F983, "\350\204\203"},
    {0x2F984, "\344\220\213"},
    {0x2F985, "\350\204\276"},
    {0x2F986, "\345\252\265"},
    {0x2F987, "\360\246\236\247"},
    {0x2F988, "\360\246\236\265"},
    {0x2F989, "\360\243\216\223"},
    {0x2F98A, "\360\243\216\234"},
    {0x2F98B, "\350\210\201"},
    {0x2F98C, "\350\210\204"},
    {0x2F98D, "\350\276\236"},
    {0x2F98E, "\344\221\253"},
    {0x2F98F, "\350\212\221"},
    {0x2F990, "\350\212\213"},
    {0x2F991, "\350\212\235"},
    {0x2F992, "\345\212\263"},
    {0x2F993, "\350\212\261"},
    {0x2F994, "\350\212\263"},
    {0x2F995, "\350\212\275"},
    {0x2F996, "\350\213\246"},
    {0x2F997, "\360\246\254\274"},
    {0x2F998, "\350\213\245"},
    {0x2F999, "\350\214\235"},
    {0x2F99A, "\350\215\243"},
    {0x2F99B, "\350\216\255"},
    {0x2F99C, "\350\214\243"},
    {0x2F99D, "\350\216\275"},
    {0x2F99E, "\350\217\247"},
    {0x2F99F, "\350\221\227"},
    {0x2F9A0, "\350\215\223"},
    {0x2F9A1, "\350\217\212"},
    {0x2F9A2, "\350\217\214"},
    {0x2F9A3, "\350\217\234"},
    {0x2F9A4, "\360\246\260\266"},
    {0x2F9A5, "\360\246\265\253"},
    {0x2F9A6, "\360\246\263\225"},
    {0x2F9A7, "\344\224\253"},
    {0x2F9A8, "\350\223\261"},
    {0x2F9A9, "\350\223\263"},
    {0x2F9AA, "\350\224\226"},
    {0x2F9AB, "\360\247\217\212"},
    {0x2F9AC, "\350\225\244"},
    {0x2F9AD, "\360\246\274\254"},
    {0x2F9AE, "\344\225\235"},
    {0x2F9AF, "\344\225\241"},
    {0x2F9B0, "\360\246\276\261"},
    {0x2F9B1, "\360\247\203\222"},
    {0x2F9B2, "\344\225\253"},
    {0x2F9B3, "\350\231\220"},
    {0x2F9B4, "\350\231\234"},
    {0x2F9B5, "\350\231\247"},
    {0x2F9B6, "\350\231\251"},
    {0x2F9B7, "\350\232\251"},
    {0x2F9B8, "\350\232\210"},
    {0x2F9B9, "\350\234\216"},
    {0x2F9BA, "\350\233\242"},
    {0x2F9BB, "\350\235\271"},
    {0x2F9BC, "\350\234\250"},
    {0x2F9BD, "\350\235\253"},
    {0x2F9BE, "\350\236\206"},
    {0x2F9BF, "\344\227\227"},
    {0x2F9C0, "\350\237\241"},
    {0x2F9C1, "\350\240\201"},
    {0x2F9C2, "\344\227\271"},
    {0x2F9C3, "\350\241\240"},
    {0x2F9C4, "\350\241\243"},
    {0x2F9C5, "\360\247\231\247"},
    {0x2F9C6, "\350\243\227"},
    {0x2F9C7, "\350\243\236"},
    {0x2F9C8, "\344\230\265"},
    {0x2F9C9, "\350\243\272"},
    {0x2F9CA, "\343\222\273"},
    {0x2F9CB, "\360\247\242\256"},
    {0x2F9CC, "\360\247\245\246"},
    {0x2F9CD, "\344\232\276"},
    {0x2F9CE, "\344\233\207"},
    {0x2F9CF, "\350\252\240"},
    {0x2F9D0, "\350\253\255"},
    {0x2F9D1, "\350\256\212"},
    {0x2F9D2, "\350\261\225"},
    {0x2F9D3, "\360\247\262\250"},
    {0x2F9D4, "\350\262\253"},
    {0x2F9D5, "\350\263\201"},
    {0x2F9D6, "\350\264\233"},
    {0x2F9D7, "\350\265\267"},
    {0x2F9D8, "\360\247\274\257"},
    {0x2F9D9, "\360\240\240\204"},
    {0x2F9DA, "\350\267\213"},
    {0x2F9DB, "\350\266\274"},
    {0x2F9DC, "\350\267\260"},
    {0x2F9DD, "\360\240\243\236"},
    {0x2F9DE, "\350\273\224"},
    {0x2F9DF, "\350\274\270"},
    {0x2F9E0, "\360\250\227\222"},
    {0x2F9E1, "\360\250\227\255"},
    {0x2F9E2, "\351\202\224"},
    {0x2F9E3, "\351\203\261"},
    {0x2F9E4, "\351\204\221"},
    {0x2F9E5, "\360\250\234\256"},
    {0x2F9E6, "\351\204\233"},
    {0x2F9E7, "\351\210\270"},
    {0x2F9E8, "\351\213\227"},
    {0x2F9E9, "\351\213\230"},
    {0x2F9EA, "\351\211\274"},
    {0x2F9EB, "\351\217\271"},
    {0x2F9EC, "\351\220\225"},
    {0x2F9ED, "\360\250\257\272"},
    {0x2F9EE, "\351\226\213"},
    {0x2F9EF, "\344\246\225"},
    {0x2F9F0, "\351\226\267"},
    {0x2F9F1, "\360\250\265\267"},
    {0x2F9F2, "\344\247\246"},
    {0x2F9F3, "\351\233\203"},
    {0x2F9F4, "\345\266\262"},
    {0x2F9F5, "\351\234\243"},
    {0x2F9F6, "\360\251\205\205"},
    {0x2F9F7, "\360\251\210\232"},
    {0x2F9F8, "\344\251\256"},
    {0x2F9F9, "\344\251\266"},
    {0x2F9FA, "\351\237\240"},
    {0x2F9FB, "\360\251\220\212"},
    {0x2F9FC, "\344\252\262"},
    {0x2F9FD, "\360\251\222\226"},
    {0x2F9FE, "\351\240\213"},
    {0x2F9FF, "\351\240\213"},
    {0x2FA00, "\351\240\251"},
    {0x2FA01, "\360\251\226\266"},
    {0x2FA02, "\351\243\242"},
    {0x2FA03, "\344\254\263"},
    {0x2FA04, "\351\244\251"},
    {0x2FA05, "\351\246\247"},
    {0x2FA06, "\351\247\202"},
    {0x2FA07, "\351\247\276"},
    {0x2FA08, "\344\257\216"},
    {0x2FA09, "\360\251\254\260"},
    {0x2FA0A, "\351\254\222"},
    {0x2FA0B, "\351\261\200"},
    {0x2FA0C, "\351\263\275"},
    {0x2FA0D, "\344\263\216"},
    {0x2FA0E, "\344\263\255"},
    {0x2FA0F, "\351\265\247"},
    {0x2FA10, "\360\252\203\216"},
    {0x2FA11, "\344\263\270"},
    {0x2FA12, "\360\252\204\205"},
    {0x2FA13, "\360\252\210\216"},
    {0x2FA14, "\360\252\212\221"},
    {0x2FA15, "\351\272\273"},
    {0x2FA16, "\344\265\226"},
    {0x2FA17, "\351\273\271"},
    {0x2FA18, "\351\273\276"},
    {0x2FA19, "\351\274\205"},
    {0x2FA1A, "\351\274\217"},
    {0x2FA1B, "\351\274\226"},
    {0x2FA1C, "\351\274\273"},
    {0x2FA1D, "\360\252\230\200"},
};
const std::size_t kFoldTableSize = sizeof(kFoldTable) / sizeof(kFoldTable[0]);

const CpRange kPunctSymbolRanges[] = {
    {0x21, 0x2F},
    {0x3A, 0x40},
    {0x5B, 0x60},
    {0x7B, 0x7E},
    {0xA1, 0xA9},
    {0xAB, 0xAC},
    {0xAE, 0xB1},
    {0xB4, 0xB4},
    {0xB6, 0xB8},
    {0xBB, 0xBB},
    {0xBF, 0xBF},
    {0xD7, 0xD7},
    {0xF7, 0xF7},
    {0x2C2, 0x2C5},
    {0x2D2, 0x2DF},
    {0x2E5, 0x2EB},
    {0x2ED, 0x2ED},
    {0x2EF, 0x2FF},
    {0x375, 0x375},
    {0x37E, 0x37E},
    {0x384, 0x385},
    {0x387, 0x387},
    {0x3F6, 0x3F6},
    {0x482, 0x482},
    {0x55A, 0x55F},
    {0x589, 0x58A},
    {0x58D, 0x58F},
    {0x5BE, 0x5BE},
    {0x5C0, 0x5C0},
    {0x5C3, 0x5C3},
    {0x5C6, 0x5C6},
    {0x5F3, 0x5F4},
    {0x606, 0x60F},
    {0x61B, 0x61B},
    {0x61E, 0x61F},
    {0x66A, 0x66D},
    {0x6D4, 0x6D4},
    {0x6DE, 0x6DE},
    {0x6E9, 0x6E9},
    {0x6FD, 0x6FE},
    {0x700, 0x70D},
    {0x7F6, 0x7F9},
    {0x7FE, 0x7FF},
    {0x830, 0x83E},
    {0x85E, 0x85E},
    {0x964, 0x965},
    {0x970, 0x970},
    {0x9F2, 0x9F3},
    {0x9FA, 0x9FB},
    {0x9FD, 0x9FD},
    {0xA76, 0xA76},
    {0xAF0, 0xAF1},
    {0xB70, 0xB70},
    {0xBF3, 0xBFA},
    {0xC77, 0xC77},
    {0xC7F, 0xC7F},
    {0xC84, 0xC84},
    {0xD4F, 0xD4F},
    {0xD79, 0xD79},
    {0xDF4, 0xDF4},
    {0xE3F, 0xE3F},
    {0xE4F, 0xE4F},
    {0xE5A, 0xE5B},
    {0xF01, 0xF17},
    {0xF1A, 0xF1F},
    {0xF34, 0xF34},
    {0xF36, 0xF36},
    {0xF38, 0xF38},
    {0xF3A, 0xF3D},
    {0xF85, 0xF85},
    {0xFBE, 0xFC5},
    {0xFC7, 0xFCC},
    {0xFCE, 0xFDA},
    {0x104A, 0x104F},
    {0x109E, 0x109F},
    {0x10FB, 0x10FB},
    {0x1360, 0x1368},
    {0x1390, 0x1399},
    {0x1400, 0x1400},
    {0x166D, 0x166E},
    {0x169B, 0x169C},
    {0x16EB, 0x16ED},
    {0x1735, 0x1736},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DB},
    {0x1800, 0x180A},
    {0x1940, 0x1940},
    {0x1944, 0x1945},
    {0x19DE, 0x19FF},
    {0x1A1E, 0x1A1F},
    {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B6A},
    {0x1B74, 0x1B7C},
    {0x1BFC, 0x1BFF},
    {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F},
    {0x1CC0, 0x1CC7},
    {0x1CD3, 0x1CD3},
    {0x1FBD, 0x1FBD},
    {0x1FBF, 0x1FC1},
    {0x1FCD, 0x1FCF},
    {0x1FDD, 0x1FDF},
    {0x1FED, 0x1FEF},
    {0x1FFD, 0x1FFE},
    {0x2010, 0x2027},
    {0x2030, 0x205E},
    {0x207A, 0x207E},
    {0x208A, 0x208E},
    {0x20A0, 0x20BF},
    {0x2100, 0x2101},
    {0x2103, 0x2106},
    {0x2108, 0x2109},
    {0x2114, 0x2114},
    {0x2116, 0x2118},
    {0x211E, 0x2123},
    {0x2125, 0x2125},
    {0x2127, 0x2127},
    {0x2129, 0x2129},
    {0x212E, 0x212E},
    {0x213A, 0x213B},
    {0x2140, 0x2144},
    {0x214A, 0x214D},
    {0x214F, 0x214F},
    {0x218A, 0x218B},
    {0x2190, 0x2426},
    {0x2440, 0x244A},
    {0x249C, 0x24E9},
    {0x2500, 0x2775},
    {0x2794, 0x2B73},
    {0x2B76, 0x2B95},
    {0x2B97, 0x2BFF},
    {0x2CE5, 0x2CEA},
    {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2E52},
    {0x2E80, 0x2E99},
    {0x2E9B, 0x2EF3},
    {0x2F00, 0x2FD5},
    {0x2FF0, 0x2FFB},
    {0x3001, 0x3004},
    {0x3008, 0x3020},
    {0x3030, 0x3030},
    {0x3036, 0x3037},
    {0x303D, 0x303F},
    {0x309B, 0x309C},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0x3190, 0x3191},
    {0x3196, 0x319F},
    {0x31C0, 0x31E3},
    {0x3200, 0x321E},
    {0x322A, 0x3247},
    {0x3250, 0x3250},
    {0x3260, 0x327F},
    {0x328A, 0x32B0},
    {0x32C0, 0x33FF},
    {0x4DC0, 0x4DFF},
    {0xA490, 0xA4C6},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA6F7},
    {0xA700, 0xA716},
    {0xA720, 0xA721},
    {0xA789, 0xA78A},
    {0xA828, 0xA82B},
    {0xA836, 0xA839},
    {0xA874, 0xA877},
    {0xA8CE, 0xA8CF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA95F, 0xA95F},
    {0xA9C1, 0xA9CD},
    {0xA9DE, 0xA9DF},
    {0xAA5C, 0xAA5F},
    {0xAA77, 0xAA79},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xAB5B, 0xAB5B},
    {0xAB6A, 0xAB6B},
    {0xABEB, 0xABEB},
    {0xFB29, 0xFB29},
    {0xFBB2, 0xFBC1},
    {0xFD3E, 0xFD3F},
    {0xFDFC, 0xFDFD},
    {0xFE10, 0xFE19},
    {0xFE30, 0xFE52},
    {0xFE54, 0xFE66},
    {0xFE68, 0xFE6B},
    {0xFF01, 0xFF0F},
    {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},
    {0xFFE0, 0xFFE6},
    {0xFFE8, 0xFFEE},
    {0xFFFC, 0xFFFD},
    {0x10100, 0x10102},
    {0x10137, 0x1013F},
    {0x10179, 0x10189},
    {0x1018C, 0x1018E},
    {0x10190, 0x1019C},
    {0x101A0, 0x101A0},
    {0x101D0, 0x101FC},
    {0x1039F, 0x1039F},
    {0x103D0, 0x103D0},
    {0x1056F, 0x1056F},
    {0x10857, 0x10857},
    {0x10877, 0x10878},
    {0x1091F, 0x1091F},
    {0x1093F, 0x1093F},
    {0x10A50, 0x10A58},
    {0x10A7F, 0x10A7F},
    {0x10AC8, 0x10AC8},
    {0x10AF0, 0x10AF6},
    {0x10B39, 0x10B3F},
    {0x10B99, 0x10B9C},
    {0x10EAD, 0x10EAD},
    {0x10F55, 0x10F59},
    {0x11047, 0x1104D},
    {0x110BB, 0x110BC},
    {0x110BE, 0x110C1},
    {0x11140, 0x11143},
    {0x11174, 0x11175},
    {0x111C5, 0x111C8},
    {0x111CD, 0x111CD},
    {0x111DB, 0x111DB},
    {0x111DD, 0x111DF},
    {0x11238, 0x1123D},
    {0x112A9, 0x112A9},
    {0x1144B, 0x1144F},
    {0x1145A, 0x1145B},
    {0x1145D, 0x1145D},
    {0x114C6, 0x114C6},
    {0x115C1, 0x115D7},
    {0x11641, 0x11643},
    {0x11660, 0x1166C},
    {0x1173C, 0x1173F},
    {0x1183B, 0x1183B},
    {0x11944, 0x11946},
    {0x119E2, 0x119E2},
    {0x11A3F, 0x11A46},
    {0x11A9A, 0x11A9C},
    {0x11A9E, 0x11AA2},
    {0x11C41, 0x11C45},
    {0x11C70, 0x11C71},
    {0x11EF7, 0x11EF8},
    {0x11FD5, 0x11FF1},
    {0x11FFF, 0x11FFF},
    {0x12470, 0x12474},
    {0x16A6E, 0x16A6F},
    {0x16AF5, 0x16AF5},
    {0x16B37, 0x16B3F},
    {0x16B44, 0x16B45},
    {0x16E97, 0x16E9A},
    {0x16FE2, 0x16FE2},
    {0x1BC9C, 0x1BC9C},
    {0x1BC9F, 0x1BC9F},
    {0x1D000, 0x1D0F5},
    {0x1D100, 0x1D126},
    {0x1D129, 0x1D164},
    {0x1D16A, 0x1D16C},
    {0x1D183, 0x1D184},
    {0x1D18C, 0x1D1A9},
    {0x1D1AE, 0x1D1E8},
    {0x1D200, 0x1D241},
    {0x1D245, 0x1D245},
    {0x1D300, 0x1D356},
    {0x1D6C1, 0x1D6C1},
    {0x1D6DB, 0x1D6DB},
    {0x1D6FB, 0x1D6FB},
    {0x1D715, 0x1D715},
    {0x1D735, 0x1D735},
    {0x1D74F, 0x1D74F},
    {0x1D76F, 0x1D76F},
    {0x1D789, 0x1D789},
    {0x1D7A9, 0x1D7A9},
    {0x1D7C3, 0x1D7C3},
    {0x1D800, 0x1D9FF},
    {0x1DA37, 0x1DA3A},
    {0x1DA6D, 0x1DA74},
    {0x1DA76, 0x1DA83},
    {0x1DA85, 0x1DA8B},
    {0x1E14F, 0x1E14F},
    {0x1E2FF, 0x1E2FF},
    {0x1E95E, 0x1E95F},
    {0x1ECAC, 0x1ECAC},
    {0x1ECB0, 0x1ECB0},
    {0x1ED2E, 0x1ED2E},
    {0x1EEF0, 0x1EEF1},
    {0x1F000, 0x1F02B},
    {0x1F030, 0x1F093},
    {0x1F0A0, 0x1F0AE},
    {0x1F0B1, 0x1F0BF},
    {0x1F0C1, 0x1F0CF},
    {0x1F0D1, 0x1F0F5},
    {0x1F10D, 0x1F1AD},
    {0x1F1E6, 0x1F202},
    {0x1F210, 0x1F23B},
    {0x1F240, 0x1F248},
    {0x1F250, 0x1F251},
    {0x1F260, 0x1F265},
    {0x1F300, 0x1F6D7},
    {0x1F6E0, 0x1F6EC},
    {0x1F6F0, 0x1F6FC},
    {0x1F700, 0x1F773},
    {0x1F780, 0x1F7D8},
    {0x1F7E0, 0x1F7EB},
    {0x1F800, 0x1F80B},
    {0x1F810, 0x1F847},
    {0x1F850, 0x1F859},
    {0x1F860, 0x1F887},
    {0x1F890, 0x1F8AD},
    {0x1F8B0, 0x1F8B1},
    {0x1F900, 0x1F978},
    {0x1F97A, 0x1F9CB},
    {0x1F9CD, 0x1FA53},
    {0x1FA60, 0x1FA6D},
    {0x1FA70, 0x1FA74},
    {0x1FA78, 0x1FA7A},
    {0x1FA80, 0x1FA86},
    {0x1FA90, 0x1FAA8},
    {0x1FAB0, 0x1FAB6},
    {0x1FAC0, 0x1FAC2},
    {0x1FAD0, 0x1FAD6},
    {0x1FB00, 0x1FB92},
    {0x1FB94, 0x1FBCA},
};
const std::size_t kPunctSymbolRangesSize = sizeof(kPunctSymbolRanges) / sizeof(kPunctSymbolRanges[0]);

const CpRange kSpaceRanges[] = {
    {0x9, 0xD},
    {0x1C, 0x20},
    {0x85, 0x85},
    {0xA0, 0xA0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x2028, 0x2029},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
};
const std::size_t kSpaceRangesSize = sizeof(kSpaceRanges) / sizeof(kSpaceRanges[0]);

const CpRange kLetterRanges[] = {
    {0x41, 0x5A},
    {0x61, 0x7A},
    {0xAA, 0xAA},
    {0xB5, 0xB5},
    {0xBA, 0xBA},
    {0xC0, 0xD6},
    {0xD8, 0xF6},
    {0xF8, 0x2C1},
    {0x2C6, 0x2D1},
    {0x2E0, 0x2E4},
    {0x2EC, 0x2EC},
    {0x2EE, 0x2EE},
    {0x370, 0x374},
    {0x376, 0x377},
    {0x37A, 0x37D},
    {0x37F, 0x37F},
    {0x386, 0x386},
    {0x388, 0x38A},
    {0x38C, 0x38C},
    {0x38E, 0x3A1},
    {0x3A3, 0x3F5},
    {0x3F7, 0x481},
    {0x48A, 0x52F},
    {0x531, 0x556},
    {0x559, 0x559},
    {0x560, 0x588},
    {0x5D0, 0x5EA},
    {0x5EF, 0x5F2},
    {0x620, 0x64A},
    {0x66E, 0x66F},
    {0x671, 0x6D3},
    {0x6D5, 0x6D5},
    {0x6E5, 0x6E6},
    {0x6EE, 0x6EF},
    {0x6FA, 0x6FC},
    {0x6FF, 0x6FF},
    {0x710, 0x710},
    {0x712, 0x72F},
    {0x74D, 0x7A5},
    {0x7B1, 0x7B1},
    {0x7CA, 0x7EA},
    {0x7F4, 0x7F5},
    {0x7FA, 0x7FA},
    {0x800, 0x815},
    {0x81A, 0x81A},
    {0x824, 0x824},
    {0x828, 0x828},
    {0x840, 0x858},
    {0x860, 0x86A},
    {0x8A0, 0x8B4},
    {0x8B6, 0x8C7},
    {0x904, 0x939},
    {0x93D, 0x93D},
    {0x950, 0x950},
    {0x958, 0x961},
    {0x971, 0x980},
    {0x985, 0x98C},
    {0x98F, 0x990},
    {0x993, 0x9A8},
    {0x9AA, 0x9B0},
    {0x9B2, 0x9B2},
    {0x9B6, 0x9B9},
    {0x9BD, 0x9BD},
    {0x9CE, 0x9CE},
    {0x9DC, 0x9DD},
    {0x9DF, 0x9E1},
    {0x9F0, 0x9F1},
    {0x9FC, 0x9FC},
    {0xA05, 0xA0A},
    {0xA0F, 0xA10},
    {0xA13, 0xA28},
    {0xA2A, 0xA30},
    {0xA32, 0xA33},
    {0xA35, 0xA36},
    {0xA38, 0xA39},
    {0xA59, 0xA5C},
    {0xA5E, 0xA5E},
    {0xA72, 0xA74},
    {0xA85, 0xA8D},
    {0xA8F, 0xA91},
    {0xA93, 0xAA8},
    {0xAAA, 0xAB0},
    {0xAB2, 0xAB3},
    {0xAB5, 0xAB9},
    {0xABD, 0xABD},
    {0xAD0, 0xAD0},
    {0xAE0, 0xAE1},
    {0xAF9, 0xAF9},
    {0xB05, 0xB0C},
    {0xB0F, 0xB10},
    {0xB13, 0xB28},
    {0xB2A, 0xB30},
    {0xB32, 0xB33},
    {0xB35, 0xB39},
    {0xB3D, 0xB3D},
    {0xB5C, 0xB5D},
    {0xB5F, 0xB61},
    {0xB71, 0xB71},
    {0xB83, 0xB83},
    {0xB85, 0xB8A},
    {0xB8E, 0xB90},
    {0xB92, 0xB95},
    {0xB99, 0xB9A},
    {0xB9C, 0xB9C},
    {0xB9E, 0xB9F},
    {0xBA3, 0xBA4},
    {0xBA8, 0xBAA},
    {0xBAE, 0xBB9},
    {0xBD0, 0xBD0},
    {0xC05, 0xC0C},
    {0xC0E, 0xC10},
    {0xC12, 0xC28},
    {0xC2A, 0xC39},
    {0xC3D, 0xC3D},
    {0xC58, 0xC5A},
    {0xC60, 0xC61},
    {0xC80, 0xC80},
    {0xC85, 0xC8C},
    {0xC8E, 0xC90},
    {0xC92, 0xCA8},
    {0xCAA, 0xCB3},
    {0xCB5, 0xCB9},
    {0xCBD, 0xCBD},
    {0xCDE, 0xCDE},
    {0xCE0, 0xCE1},
    {0xCF1, 0xCF2},
    {0xD04, 0xD0C},
    {0xD0E, 0xD10},
    {0xD12, 0xD3A},
    {0xD3D, 0xD3D},
    {0xD4E, 0xD4E},
    {0xD54, 0xD56},
    {0xD5F, 0xD61},
    {0xD7A, 0xD7F},
    {0xD85, 0xD96},
    {0xD9A, 0xDB1},
    {0xDB3, 0xDBB},
    {0xDBD, 0xDBD},
    {0xDC0, 0xDC6},
    {0xE01, 0xE30},
    {0xE32, 0xE33},
    {0xE40, 0xE46},
    {0xE81, 0xE82},
    {0xE84, 0xE84},
    {0xE86, 0xE8A},
    {0xE8C, 0xEA3},
    {0xEA5, 0xEA5},
    {0xEA7, 0xEB0},
    {0xEB2, 0xEB3},
    {0xEBD, 0xEBD},
    {0xEC0, 0xEC4},
    {0xEC6, 0xEC6},
    {0xEDC, 0xEDF},
    {0xF00, 0xF00},
    {0xF40, 0xF47},
    {0xF49, 0xF6C},
    {0xF88, 0xF8C},
    {0x1000, 0x102A},
    {0x103F, 0x103F},
    {0x1050, 0x1055},
    {0x105A, 0x105D},
    {0x1061, 0x1061},
    {0x1065, 0x1066},
    {0x106E, 0x1070},
    {0x1075, 0x1081},
    {0x108E, 0x108E},
    {0x10A0, 0x10C5},
    {0x10C7, 0x10C7},
    {0x10CD, 0x10CD},
    {0x10D0, 0x10FA},
    {0x10FC, 0x1248},
    {0x124A, 0x124D},
    {0x1250, 0x1256},
    {0x1258, 0x1258},
    {0x125A, 0x125D},
    {0x1260, 0x1288},
    {0x128A, 0x128D},
    {0x1290, 0x12B0},
    {0x12B2, 0x12B5},
    {0x12B8, 0x12BE},
    {0x12C0, 0x12C0},
    {0x12C2, 0x12C5},
    {0x12C8, 0x12D6},
    {0x12D8, 0x1310},
    {0x1312, 0x1315},
    {0x1318, 0x135A},
    {0x1380, 0x138F},
    {0x13A0, 0x13F5},
    {0x13F8, 0x13FD},
    {0x1401, 0x166C},
    {0x166F, 0x167F},
    {0x1681, 0x169A},
    {0x16A0, 0x16EA},
    {0x16F1, 0x16F8},
    {0x1700, 0x170C},
    {0x170E, 0x1711},
    {0x1720, 0x1731},
    {0x1740, 0x1751},
    {0x1760, 0x176C},
    {0x176E, 0x1770},
    {0x1780, 0x17B3},
    {0x17D7, 0x17D7},
    {0x17DC, 0x17DC},
    {0x1820, 0x1878},
    {0x1880, 0x1884},
    {0x1887, 0x18A8},
    {0x18AA, 0x18AA},
    {0x18B0, 0x18F5},
    {0x1900, 0x191E},
    {0x1950, 0x196D},
    {0x1970, 0x1974},
    {0x1980, 0x19AB},
    {0x19B0, 0x19C9},
    {0x1A00, 0x1A16},
    {0x1A20, 0x1A54},
    {0x1AA7, 0x1AA7},
    {0x1B05, 0x1B33},
    {0x1B45, 0x1B4B},
    {0x1B83, 0x1BA0},
    {0x1BAE, 0x1BAF},
    {0x1BBA, 0x1BE5},
    {0x1C00, 0x1C23},
    {0x1C4D, 0x1C4F},
    {0x1C5A, 0x1C7D},
    {0x1C80, 0x1C88},
    {0x1C90, 0x1CBA},
    {0x1CBD, 0x1CBF},
    {0x1CE9, 0x1CEC},
    {0x1CEE, 0x1CF3},
    {0x1CF5, 0x1CF6},
    {0x1CFA, 0x1CFA},
    {0x1D00, 0x1DBF},
    {0x1E00, 0x1F15},
    {0x1F18, 0x1F1D},
    {0x1F20, 0x1F45},
    {0x1F48, 0x1F4D},
    {0x1F50, 0x1F57},
    {0x1F59, 0x1F59},
    {0x1F5B, 0x1F5B},
    {0x1F5D, 0x1F5D},
    {0x1F5F, 0x1F7D},
    {0x1F80, 0x1FB4},
    {0x1FB6, 0x1FBC},
    {0x1FBE, 0x1FBE},
    {0x1FC2, 0x1FC4},
    {0x1FC6, 0x1FCC},
    {0x1FD0, 0x1FD3},
    {0x1FD6, 0x1FDB},
    {0x1FE0, 0x1FEC},
    {0x1FF2, 0x1FF4},
    {0x1FF6, 0x1FFC},
    {0x2071, 0x2071},
    {0x207F, 0x207F},
    {0x2090, 0x209C},
    {0x2102, 0x2102},
    {0x2107, 0x2107},
    {0x210A, 0x2113},
    {0x2115, 0x2115},
    {0x2119, 0x211D},
    {0x2124, 0x2124},
    {0x2126, 0x2126},
    {0x2128, 0x2128},
    {0x212A, 0x212D},
    {0x212F, 0x2139},
    {0x213C, 0x213F},
    {0x2145, 0x2149},
    {0x214E, 0x214E},
    {0x2183, 0x2184},
    {0x2C00, 0x2C2E},
    {0x2C30, 0x2C5E},
    {0x2C60, 0x2CE4},
    {0x2CEB, 0x2CEE},
    {0x2CF2, 0x2CF3},
    {0x2D00, 0x2D25},
    {0x2D27, 0x2D27},
    {0x2D2D, 0x2D2D},
    {0x2D30, 0x2D67},
    {0x2D6F, 0x2D6F},
    {0x2D80, 0x2D96},
    {0x2DA0, 0x2DA6},
    {0x2DA8, 0x2DAE},
    {0x2DB0, 0x2DB6},
    {0x2DB8, 0x2DBE},
    {0x2DC0, 0x2DC6},
    {0x2DC8, 0x2DCE},
    {0x2DD0, 0x2DD6},
    {0x2DD8, 0x2DDE},
    {0x2E2F, 0x2E2F},
    {0x3005, 0x3006},
    {0x3031, 0x3035},
    {0x303B, 0x303C},
    {0x3041, 0x3096},
    {0x309D, 0x309F},
    {0x30A1, 0x30FA},
    {0x30FC, 0x30FF},
    {0x3105, 0x312F},
    {0x3131, 0x318E},
    {0x31A0, 0x31BF},
    {0x31F0, 0x31FF},
    {0x3400, 0x4DBF},
    {0x4E00, 0x9FFC},
    {0xA000, 0xA48C},
    {0xA4D0, 0xA4FD},
    {0xA500, 0xA60C},
    {0xA610, 0xA61F},
    {0xA62A, 0xA62B},
    {0xA640, 0xA66E},
    {0xA67F, 0xA69D},
    {0xA6A0, 0xA6E5},
    {0xA717, 0xA71F},
    {0xA722, 0xA788},
    {0xA78B, 0xA7BF},
    {0xA7C2, 0xA7CA},
    {0xA7F5, 0xA801},
    {0xA803, 0xA805},
    {0xA807, 0xA80A},
    {0xA80C, 0xA822},
    {0xA840, 0xA873},
    {0xA882, 0xA8B3},
    {0xA8F2, 0xA8F7},
    {0xA8FB, 0xA8FB},
    {0xA8FD, 0xA8FE},
    {0xA90A, 0xA925},
    {0xA930, 0xA946},
    {0xA960, 0xA97C},
    {0xA984, 0xA9B2},
    {0xA9CF, 0xA9CF},
    {0xA9E0, 0xA9E4},
    {0xA9E6, 0xA9EF},
    {0xA9FA, 0xA9FE},
    {0xAA00, 0xAA28},
    {0xAA40, 0xAA42},
    {0xAA44, 0xAA4B},
    {0xAA60, 0xAA76},
    {0xAA7A, 0xAA7A},
    {0xAA7E, 0xAAAF},
    {0xAAB1, 0xAAB1},
    {0xAAB5, 0xAAB6},
    {0xAAB9, 0xAABD},
    {0xAAC0, 0xAAC0},
    {0xAAC2, 0xAAC2},
    {0xAADB, 0xAADD},
    {0xAAE0, 0xAAEA},
    {0xAAF2, 0xAAF4},
    {0xAB01, 0xAB06},
    {0xAB09, 0xAB0E},
    {0xAB11, 0xAB16},
    {0xAB20, 0xAB26},
    {0xAB28, 0xAB2E},
    {0xAB30, 0xAB5A},
    {0xAB5C, 0xAB69},
    {0xAB70, 0xABE2},
    {0xAC00, 0xD7A3},
    {0xD7B0, 0xD7C6},
    {0xD7CB, 0xD7FB},
    {0xF900, 0xFA6D},
    {0xFA70, 0xFAD9},
    {0xFB00, 0xFB06},
    {0xFB13, 0xFB17},
    {0xFB1D, 0xFB1D},
    {0xFB1F, 0xFB28},
    {0xFB2A, 0xFB36},
    {0xFB38, 0xFB3C},
    {0xFB3E, 0xFB3E},
    {0xFB40, 0xFB41},
    {0xFB43, 0xFB44},
    {0xFB46, 0xFBB1},
    {0xFBD3, 0xFD3D},
    {0xFD50, 0xFD8F},
    {0xFD92, 0xFDC7},
    {0xFDF0, 0xFDFB},
    {0xFE70, 0xFE74},
    {0xFE76, 0xFEFC},
    {0xFF21, 0xFF3A},
    {0xFF41, 0xFF5A},
    {0xFF66, 0xFFBE},
    {0xFFC2, 0xFFC7},
    {0xFFCA, 0xFFCF},
    {0xFFD2, 0xFFD7},
    {0xFFDA, 0xFFDC},
    {0x10000, 0x1000B},
    {0x1000D, 0x10026},
    {0x10028, 0x1003A},
    {0x1003C, 0x1003D},
    {0x1003F, 0x1004D},
    {0x10050, 0x1005D},
    {0x10080, 0x100FA},
    {0x10280, 0x1029C},
    {0x102A0, 0x102D0},
    {0x10300, 0x1031F},
    {0x1032D, 0x10340},
    {0x10342, 0x10349},
    {0x10350, 0x10375},
    {0x10380, 0x1039D},
    {0x103A0, 0x103C3},
    {0x103C8, 0x103CF},
    {0x10400, 0x1049D},
    {0x104B0, 0x104D3},
    {0x104D8, 0x104FB},
    {0x10500, 0x10527},
    {0x10530, 0x10563},
    {0x10600, 0x10736},
    {0x10740, 0x10755},
    {0x10760, 0x10767},
    {0x10800, 0x10805},
    {0x10808, 0x10808},
    {0x1080A, 0x10835},
    {0x10837, 0x10838},
    {0x1083C, 0x1083C},
    {0x1083F, 0x10855},
    {0x10860, 0x10876},
    {0x10880, 0x1089E},
    {0x108E0, 0x108F2},
    {0x108F4, 0x108F5},
    {0x10900, 0x10915},
    {0x10920, 0x10939},
    {0x10980, 0x109B7},
    {0x109BE, 0x109BF},
    {0x10A00, 0x10A00},
    {0x10A10, 0x10A13},
    {0x10A15, 0x10A17},
    {0x10A19, 0x10A35},
    {0x10A60, 0x10A7C},
    {0x10A80, 0x10A9C},
    {0x10AC0, 0x10AC7},
    {0x10AC9, 0x10AE4},
    {0x10B00, 0x10B35},
    {0x10B40, 0x10B55},
    {0x10B60, 0x10B72},
    {0x10B80, 0x10B91},
    {0x10C00, 0x10C48},
    {0x10C80, 0x10CB2},
    {0x10CC0, 0x10CF2},
    {0x10D00, 0x10D23},
    {0x10E80, 0x10EA9},
    {0x10EB0, 0x10EB1},
    {0x10F00, 0x10F1C},
    {0x10F27, 0x10F27},
    {0x10F30, 0x10F45},
    {0x10FB0, 0x10FC4},
    {0x10FE0, 0x10FF6},
    {0x11003, 0x11037},
    {0x11083, 0x110AF},
    {0x110D0, 0x110E8},
    {0x11103, 0x11126},
    {0x11144, 0x11144},
    {0x11147, 0x11147},
    {0x11150, 0x11172},
    {0x11176, 0x11176},
    {0x11183, 0x111B2},
    {0x111C1, 0x111C4},
    {0x111DA, 0x111DA},
    {0x111DC, 0x111DC},
    {0x11200, 0x11211},
    {0x11213, 0x1122B},
    {0x11280, 0x11286},
    {0x11288, 0x11288},
    {0x1128A, 0x1128D},
    {0x1128F, 0x1129D},
    {0x1129F, 0x112A8},
    {0x112B0, 0x112DE},
    {0x11305, 0x1130C},
    {0x1130F, 0x11310},
    {0x11313, 0x11328},
    {0x1132A, 0x11330},
    {0x11332, 0x11333},
    {0x11335, 0x11339},
    {0x1133D, 0x1133D},
    {0x11350, 0x11350},
    {0x1135D, 0x11361},
    {0x11400, 0x11434},
    {0x11447, 0x1144A},
    {0x1145F, 0x11461},
    {0x11480, 0x114AF},
    {0x114C4, 0x114C5},
    {0x114C7, 0x114C7},
    {0x11580, 0x115AE},
    {0x115D8, 0x115DB},
    {0x11600, 0x1162F},
    {0x11644, 0x11644},
    {0x11680, 0x116AA},
    {0x116B8, 0x116B8},
    {0x11700, 0x1171A},
    {0x11800, 0x1182B},
    {0x118A0, 0x118DF},
    {0x118FF, 0x11906},
    {0x11909, 0x11909},
    {0x1190C, 0x11913},
    {0x11915, 0x11916},
    {0x11918, 0x1192F},
    {0x1193F, 0x1193F},
    {0x11941, 0x11941},
    {0x119A0, 0x119A7},
    {0x119AA, 0x119D0},
    {0x119E1, 0x119E1},
    {0x119E3, 0x119E3},
    {0x11A00, 0x11A00},
    {0x11A0B, 0x11A32},
    {0x11A3A, 0x11A3A},
    {0x11A50, 0x11A50},
    {0x11A5C, 0x11A89},
    {0x11A9D, 0x11A9D},
    {0x11AC0, 0x11AF8},
    {0x11C00, 0x11C08},
    {0x11C0A, 0x11C2E},
    {0x11C40, 0x11C40},
    {0x11C72, 0x11C8F},
    {0x11D00, 0x11D06},
    {0x11D08, 0x11D09},
    {0x11D0B, 0x11D30},
    {0x11D46, 0x11D46},
    {0x11D60, 0x11D65},
    {0x11D67, 0x11D68},
    {0x11D6A, 0x11D89},
    {0x11D98, 0x11D98},
    {0x11EE0, 0x11EF2},
    {0x11FB0, 0x11FB0},
    {0x12000, 0x12399},
    {0x12480, 0x12543},
    {0x13000, 0x1342E},
    {0x14400, 0x14646},
    {0x16800, 0x16A38},
    {0x16A40, 0x16A5E},
    {0x16AD0, 0x16AED},
    {0x16B00, 0x16B2F},
    {0x16B40, 0x16B43},
    {0x16B63, 0x16B77},
    {0x16B7D, 0x16B8F},
    {0x16E40, 0x16E7F},
    {0x16F00, 0x16F4A},
    {0x16F50, 0x16F50},
    {0x16F93, 0x16F9F},
    {0x16FE0, 0x16FE1},
    {0x16FE3, 0x16FE3},
    {0x17000, 0x187F7},
    {0x18800, 0x18CD5},
    {0x18D00, 0x18D08},
    {0x1B000, 0x1B11E},
    {0x1B150, 0x1B152},
    {0x1B164, 0x1B167},
    {0x1B170, 0x1B2FB},
    {0x1BC00, 0x1BC6A},
    {0x1BC70, 0x1BC7C},
    {0x1BC80, 0x1BC88},
    {0x1BC90, 0x1BC99},
    {0x1D400, 0x1D454},
    {0x1D456, 0x1D49C},
    {0x1D49E, 0x1D49F},
    {0x1D4A2, 0x1D4A2},
    {0x1D4A5, 0x1D4A6},
    {0x1D4A9, 0x1D4AC},
    {0x1D4AE, 0x1D4B9},
    {0x1D4BB, 0x1D4BB},
    {0x1D4BD, 0x1D4C3},
    {0x1D4C5, 0x1D505},
    {0x1D507, 0x1D50A},
    {0x1D50D, 0x1D514},
    {0x1D516, 0x1D51C},
    {0x1D51E, 0x1D539},
    {0x1D53B, 0x1D53E},
    {0x1D540, 0x1D544},
    {0x1D546, 0x1D546},
    {0x1D54A, 0x1D550},
    {0x1D552, 0x1D6A5},
    {0x1D6A8, 0x1D6C0},
    {0x1D6C2, 0x1D6DA},
    {0x1D6DC, 0x1D6FA},
    {0x1D6FC, 0x1D714},
    {0x1D716, 0x1D734},
    {0x1D736, 0x1D74E},
    {0x1D750, 0x1D76E},
    {0x1D770, 0x1D788},
    {0x1D78A, 0x1D7A8},
    {0x1D7AA, 0x1D7C2},
    {0x1D7C4, 0x1D7CB},
    {0x1E100, 0x1E12C},
    {0x1E137, 0x1E13D},
    {0x1E14E, 0x1E14E},
    {0x1E2C0, 0x1E2EB},
    {0x1E800, 0x1E8C4},
    {0x1E900, 0x1E943},
    {0x1E94B, 0x1E94B},
    {0x1EE00, 0x1EE03},
    {0x1EE05, 0x1EE1F},
    {0x1EE21, 0x1EE22},
    {0x1EE24, 0x1EE24},
    {0x1EE27, 0x1EE27},
    {0x1EE29, 0x1EE32},
    {0x1EE34, 0x1EE37},
    {0x1EE39, 0x1EE39},
    {0x1EE3B, 0x1EE3B},
    {0x1EE42, 0x1EE42},
    {0x1EE47, 0x1EE47},
    {0x1EE49, 0x1EE49},
    {0x1EE4B, 0x1EE4B},
    {0x1EE4D, 0x1EE4F},
    {0x1EE51, 0x1EE52},
    {0x1EE54, 0x1EE54},
    {0x1EE57, 0x1EE57},
    {0x1EE59, 0x1EE59},
    {0x1EE5B, 0x1EE5B},
    {0x1EE5D, 0x1EE5D},
    {0x1EE5F, 0x1EE5F},
    {0x1EE61, 0x1EE62},
    {0x1EE64, 0x1EE64},
    {0x1EE67, 0x1EE6A},
    {0x1EE6C, 0x1EE72},
    {0x1EE74, 0x1EE77},
    {0x1EE79, 0x1EE7C},
    {0x1EE7E, 0x1EE7E},
    {0x1EE80, 0x1EE89},
    {0x1EE8B, 0x1EE9B},
    {0x1EEA1, 0x1EEA3},
    {0x1EEA5, 0x1EEA9},
    {0x1EEAB, 0x1EEBB},
    {0x20000, 0x2A6DD},
    {0x2A700, 0x2B734},
    {0x2B740, 0x2B81D},
    {0x2B820, 0x2CEA1},
    {0x2CEB0, 0x2EBE0},
    {0x2F800, 0x2FA1D},
    {0x30000, 0x3134A},
};
const std::size_t kLetterRangesSize = sizeof(kLetterRanges) / sizeof(kLetterRanges[0]);

const CpRange kDigitRanges[] = {
    {0x30, 0x39},
    {0x660, 0x669},
    {0x6F0, 0x6F9},
    {0x7C0, 0x7C9},
    {0x966, 0x96F},
    {0x9E6, 0x9EF},
    {0xA66, 0xA6F},
    {0xAE6, 0xAEF},
    {0xB66, 0xB6F},
    {0xBE6, 0xBEF},
    {0xC66, 0xC6F},
    {0xCE6, 0xCEF},
    {0xD66, 0xD6F},
    {0xDE6, 0xDEF},
    {0xE50, 0xE59},
    {0xED0, 0xED9},
    {0xF20, 0xF29},
    {0x1040, 0x1049},
    {0x1090, 0x1099},
    {0x17E0, 0x17E9},
    {0x1810, 0x1819},
    {0x1946, 0x194F},
    {0x19D0, 0x19D9},
    {0x1A80, 0x1A89},
    {0x1A90, 0x1A99},
    {0x1B50, 0x1B59},
    {0x1BB0, 0x1BB9},
    {0x1C40, 0x1C49},
    {0x1C50, 0x1C59},
    {0xA620, 0xA629},
    {0xA8D0, 0xA8D9},
    {0xA900, 0xA909},
    {0xA9D0, 0xA9D9},
    {0xA9F0, 0xA9F9},
    {0xAA50, 0xAA59},
    {0xABF0, 0xABF9},
    {0xFF10, 0xFF19},
    {0x104A0, 0x104A9},
    {0x10D30, 0x10D39},
    {0x11066, 0x1106F},
    {0x110F0, 0x110F9},
    {0x11136, 0x1113F},
    {0x111D0, 0x111D9},
    {0x112F0, 0x112F9},
    {0x11450, 0x11459},
    {0x114D0, 0x114D9},
    {0x11650, 0x11659},
    {0x116C0, 0x116C9},
    {0x11730, 0x11739},
    {0x118E0, 0x118E9},
    {0x11950, 0x11959},
    {0x11C50, 0x11C59},
    {0x11D50, 0x11D59},
    {0x11DA0, 0x11DA9},
    {0x16A60, 0x16A69},
    {0x16B50, 0x16B59},
    {0x1D7CE, 0x1D7FF},
    {0x1E140, 0x1E149},
    {0x1E2F0, 0x1E2F9},
    {0x1E950, 0x1E959},
    {0x1FBF0, 0x1FBF9},
};
const std::size_t kDigitRangesSize = sizeof(kDigitRanges) / sizeof(kDigitRanges[0]);

}  // namespace caudit::uni
