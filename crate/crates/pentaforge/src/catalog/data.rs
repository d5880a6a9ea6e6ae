// Raw catalog data, one file per entry. Entries are ordered PENT first
// (by block size then replication), then the group divisible designs by
// point count.
pub(super) const RAW_ENTRIES: [(&str, &str); 51] = [
    ("PENT-4-13", include_str!("../../catalog/pent_4_13.txt")),
    ("PENT-4-17", include_str!("../../catalog/pent_4_17.txt")),
    ("PENT-4-20", include_str!("../../catalog/pent_4_20.txt")),
    ("PENT-4-21", include_str!("../../catalog/pent_4_21.txt")),
    ("PENT-4-24", include_str!("../../catalog/pent_4_24.txt")),
    ("PENT-4-29", include_str!("../../catalog/pent_4_29.txt")),
    ("PENT-4-33", include_str!("../../catalog/pent_4_33.txt")),
    ("PENT-4-37", include_str!("../../catalog/pent_4_37.txt")),
    ("PENT-4-40", include_str!("../../catalog/pent_4_40.txt")),
    ("PENT-4-45", include_str!("../../catalog/pent_4_45.txt")),
    ("PENT-4-49", include_str!("../../catalog/pent_4_49.txt")),
    ("PENT-4-52", include_str!("../../catalog/pent_4_52.txt")),
    ("PENT-4-53", include_str!("../../catalog/pent_4_53.txt")),
    ("PENT-4-60", include_str!("../../catalog/pent_4_60.txt")),
    ("PENT-4-61", include_str!("../../catalog/pent_4_61.txt")),
    ("PENT-4-65", include_str!("../../catalog/pent_4_65.txt")),
    ("PENT-4-69", include_str!("../../catalog/pent_4_69.txt")),
    ("PENT-4-77", include_str!("../../catalog/pent_4_77.txt")),
    ("PENT-4-80", include_str!("../../catalog/pent_4_80.txt")),
    ("PENT-4-81", include_str!("../../catalog/pent_4_81.txt")),
    ("PENT-4-85", include_str!("../../catalog/pent_4_85.txt")),
    ("PENT-4-93", include_str!("../../catalog/pent_4_93.txt")),
    ("PENT-4-97", include_str!("../../catalog/pent_4_97.txt")),
    ("PENT-4-100", include_str!("../../catalog/pent_4_100.txt")),
    ("PENT-4-101", include_str!("../../catalog/pent_4_101.txt")),
    ("PENT-4-108", include_str!("../../catalog/pent_4_108.txt")),
    ("PENT-4-109", include_str!("../../catalog/pent_4_109.txt")),
    ("PENT-4-117", include_str!("../../catalog/pent_4_117.txt")),
    ("PENT-4-120", include_str!("../../catalog/pent_4_120.txt")),
    ("PENT-4-125", include_str!("../../catalog/pent_4_125.txt")),
    ("PENT-4-133", include_str!("../../catalog/pent_4_133.txt")),
    ("PENT-4-140", include_str!("../../catalog/pent_4_140.txt")),
    ("PENT-4-141", include_str!("../../catalog/pent_4_141.txt")),
    ("PENT-4-149", include_str!("../../catalog/pent_4_149.txt")),
    ("PENT-4-157", include_str!("../../catalog/pent_4_157.txt")),
    ("PENT-4-160", include_str!("../../catalog/pent_4_160.txt")),
    ("PENT-4-165", include_str!("../../catalog/pent_4_165.txt")),
    ("PENT-4-173", include_str!("../../catalog/pent_4_173.txt")),
    ("PENT-4-180", include_str!("../../catalog/pent_4_180.txt")),
    ("PENT-5-20", include_str!("../../catalog/pent_5_20.txt")),
    ("PENT-5-25", include_str!("../../catalog/pent_5_25.txt")),
    ("PENT-5-30", include_str!("../../catalog/pent_5_30.txt")),
    ("PENT-5-35", include_str!("../../catalog/pent_5_35.txt")),
    ("PENT-5-40", include_str!("../../catalog/pent_5_40.txt")),
    ("GDD5-2^35", include_str!("../../catalog/gdd5_2p35.txt")),
    ("GDD5-2^40 6^1", include_str!("../../catalog/gdd5_2p40_6p1.txt")),
    ("GDD5-10^10 18^1", include_str!("../../catalog/gdd5_10p10_18p1.txt")),
    ("GDD5-2^71", include_str!("../../catalog/gdd5_2p71.txt")),
    ("GDD5-4^40 12^1", include_str!("../../catalog/gdd5_4p40_12p1.txt")),
    ("GDD5-10^23", include_str!("../../catalog/gdd5_10p23.txt")),
    ("GDD5-20^10 36^1", include_str!("../../catalog/gdd5_20p10_36p1.txt")),
];
