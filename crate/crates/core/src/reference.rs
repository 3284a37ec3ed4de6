//! Published before/after figures for the RevLib benchmark set, used as a
//! comparison column in cost reports. `prior_qc` is the quantum cost
//! reported for an earlier LNN synthesis method, where one exists.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub name: &'static str,
    pub lines: usize,
    pub gates: usize,
    pub quantum_cost: u64,
    pub swap_cost_before: u64,
    pub total_before: u64,
    pub swap_cost_after: u64,
    pub total_after: u64,
    pub reduction_pct: f64,
    pub prior_qc: Option<u64>,
}

impl ReferenceRow {
    /// Whether base cost plus SWAP cost adds up to the stated totals.
    pub fn is_self_consistent(&self) -> bool {
        self.quantum_cost + self.swap_cost_before == self.total_before
            && self.quantum_cost + self.swap_cost_after == self.total_after
    }
}

pub fn lookup(name: &str) -> Option<&'static ReferenceRow> {
    ROWS.iter().find(|r| r.name == name)
}

#[rustfmt::skip]
pub static ROWS: &[ReferenceRow] = &[
    ReferenceRow { name: "3_17_13", lines: 3, gates: 6, quantum_cost: 14, swap_cost_before: 6, total_before: 20, swap_cost_after: 0, total_after: 14, reduction_pct: 30.0, prior_qc: Some(28) },
    ReferenceRow { name: "4_49_17", lines: 4, gates: 12, quantum_cost: 16, swap_cost_before: 66, total_before: 98, swap_cost_after: 18, total_after: 50, reduction_pct: 48.9, prior_qc: Some(98) },
    ReferenceRow { name: "4gt4-v0_80", lines: 5, gates: 5, quantum_cost: 37, swap_cost_before: 120, total_before: 153, swap_cost_after: 48, total_after: 81, reduction_pct: 47.0, prior_qc: Some(138) },
    ReferenceRow { name: "4gt5_75", lines: 5, gates: 5, quantum_cost: 21, swap_cost_before: 78, total_before: 101, swap_cost_after: 36, total_after: 59, reduction_pct: 41.5, prior_qc: Some(79) },
    ReferenceRow { name: "4gt12-v1_89", lines: 5, gates: 5, quantum_cost: 45, swap_cost_before: 114, total_before: 157, swap_cost_after: 126, total_after: 169, reduction_pct: -7.64, prior_qc: Some(168) },
    ReferenceRow { name: "4gt13-v1_93", lines: 5, gates: 4, quantum_cost: 16, swap_cost_before: 72, total_before: 90, swap_cost_after: 6, total_after: 24, reduction_pct: 73.3, prior_qc: Some(53) },
    ReferenceRow { name: "4gt-10v1_81", lines: 5, gates: 6, quantum_cost: 34, swap_cost_before: 120, total_before: 158, swap_cost_after: 96, total_after: 134, reduction_pct: 15.2, prior_qc: Some(147) },
    ReferenceRow { name: "4mod5-bdd_287", lines: 7, gates: 8, quantum_cost: 24, swap_cost_before: 90, total_before: 114, swap_cost_after: 72, total_after: 96, reduction_pct: 15.7, prior_qc: None },
    ReferenceRow { name: "4mod5-v1_23", lines: 5, gates: 8, quantum_cost: 24, swap_cost_before: 84, total_before: 108, swap_cost_after: 42, total_after: 66, reduction_pct: 38.8, prior_qc: Some(78) },
    ReferenceRow { name: "5xp1_194", lines: 17, gates: 85, quantum_cost: 1430, swap_cost_before: 28194, total_before: 29523, swap_cost_after: 7164, total_after: 8493, reduction_pct: 71.2, prior_qc: None },
    ReferenceRow { name: "9symml_195", lines: 10, gates: 129, quantum_cost: 14193, swap_cost_before: 34458, total_before: 38303, swap_cost_after: 19764, total_after: 23609, reduction_pct: 38.3, prior_qc: None },
    ReferenceRow { name: "add6_196", lines: 19, gates: 229, quantum_cost: 6455, swap_cost_before: 122910, total_before: 128831, swap_cost_after: 45606, total_after: 51527, reduction_pct: 60.0, prior_qc: None },
    ReferenceRow { name: "adr4_197", lines: 13, gates: 55, quantum_cost: 727, swap_cost_before: 9774, total_before: 10489, swap_cost_after: 4986, total_after: 5701, reduction_pct: 45.6, prior_qc: None },
    ReferenceRow { name: "aj-e11_165", lines: 4, gates: 13, quantum_cost: 45, swap_cost_before: 84, total_before: 131, swap_cost_after: 90, total_after: 137, reduction_pct: -4.5, prior_qc: Some(181) },
    ReferenceRow { name: "alu1_198", lines: 20, gates: 32, quantum_cost: 228, swap_cost_before: 6498, total_before: 6756, swap_cost_after: 1944, total_after: 2202, reduction_pct: 67.4, prior_qc: None },
    ReferenceRow { name: "alu2_199", lines: 16, gates: 157, quantum_cost: 5654, swap_cost_before: 70716, total_before: 74991, swap_cost_after: 21240, total_after: 25515, reduction_pct: 65.9, prior_qc: None },
    ReferenceRow { name: "alu3_200", lines: 18, gates: 94, quantum_cost: 2632, swap_cost_before: 45954, total_before: 48290, swap_cost_after: 21000, total_after: 23336, reduction_pct: 51.6, prior_qc: None },
    ReferenceRow { name: "alu4_201", lines: 22, gates: 1063, quantum_cost: 55388, swap_cost_before: 1059834, total_before: 1106423, swap_cost_after: 541380, total_after: 587969, reduction_pct: 46.8, prior_qc: None },
    ReferenceRow { name: "alu-bdd_288", lines: 7, gates: 9, quantum_cost: 29, swap_cost_before: 144, total_before: 173, swap_cost_after: 102, total_after: 131, reduction_pct: 24.2, prior_qc: None },
    ReferenceRow { name: "apla_203", lines: 22, gates: 80, quantum_cost: 3438, swap_cost_before: 77742, total_before: 80828, swap_cost_after: 23394, total_after: 26480, reduction_pct: 67.2, prior_qc: None },
    ReferenceRow { name: "apex4_202", lines: 28, gates: 5376, quantum_cost: 237963, swap_cost_before: 7659894, total_before: 7875016, swap_cost_after: 1922358, total_after: 2137480, reduction_pct: 72.8, prior_qc: None },
    ReferenceRow { name: "bw_291", lines: 87, gates: 307, quantum_cost: 943, swap_cost_before: 79326, total_before: 80269, swap_cost_after: 46158, total_after: 47101, reduction_pct: 41.3, prior_qc: None },
    ReferenceRow { name: "c7552_205", lines: 21, gates: 80, quantum_cost: 1728, swap_cost_before: 50418, total_before: 52102, swap_cost_after: 10746, total_after: 12430, reduction_pct: 76.1, prior_qc: None },
    ReferenceRow { name: "clip_206", lines: 14, gates: 174, quantum_cost: 6731, swap_cost_before: 72792, total_before: 77764, swap_cost_after: 29292, total_after: 34264, reduction_pct: 55.9, prior_qc: None },
    ReferenceRow { name: "cm42a_207", lines: 14, gates: 35, quantum_cost: 377, swap_cost_before: 7236, total_before: 7617, swap_cost_after: 1590, total_after: 1971, reduction_pct: 74.7, prior_qc: None },
    ReferenceRow { name: "cm85a_209", lines: 14, gates: 69, quantum_cost: 2252, swap_cost_before: 26958, total_before: 28995, swap_cost_after: 11562, total_after: 13599, reduction_pct: 54.0, prior_qc: None },
    ReferenceRow { name: "cm150a_210", lines: 22, gates: 53, quantum_cost: 1096, swap_cost_before: 8472, total_before: 9467, swap_cost_after: 5124, total_after: 6119, reduction_pct: 35.3, prior_qc: None },
    ReferenceRow { name: "cm151a_211", lines: 28, gates: 33, quantum_cost: 888, swap_cost_before: 21216, total_before: 22027, swap_cost_after: 5016, total_after: 5827, reduction_pct: 73.5, prior_qc: None },
    ReferenceRow { name: "cm152a_212", lines: 12, gates: 16, quantum_cost: 252, swap_cost_before: 1566, total_before: 1816, swap_cost_after: 1416, total_after: 1666, reduction_pct: 8.2, prior_qc: None },
    ReferenceRow { name: "cm163a_213", lines: 29, gates: 39, quantum_cost: 756, swap_cost_before: 22800, total_before: 23499, swap_cost_after: 6780, total_after: 7479, reduction_pct: 68.1, prior_qc: None },
    ReferenceRow { name: "cmb_214", lines: 20, gates: 18, quantum_cost: 910, swap_cost_before: 7800, total_before: 8234, swap_cost_after: 2748, total_after: 3182, reduction_pct: 61.3, prior_qc: None },
    ReferenceRow { name: "co14_215", lines: 15, gates: 30, quantum_cost: 3488, swap_cost_before: 24438, total_before: 26064, swap_cost_after: 8466, total_after: 10092, reduction_pct: 61.2, prior_qc: None },
    ReferenceRow { name: "cu_219", lines: 25, gates: 40, quantum_cost: 1148, swap_cost_before: 30234, total_before: 31262, swap_cost_after: 9402, total_after: 10430, reduction_pct: 66.6, prior_qc: None },
    ReferenceRow { name: "cycle10_2_110", lines: 12, gates: 19, quantum_cost: 1202, swap_cost_before: 9690, total_before: 10417, swap_cost_after: 2808, total_after: 3535, reduction_pct: 66.0, prior_qc: Some(8046) },
    ReferenceRow { name: "dc1_220", lines: 11, gates: 39, quantum_cost: 416, swap_cost_before: 5994, total_before: 6419, swap_cost_after: 1482, total_after: 1907, reduction_pct: 70.2, prior_qc: None },
    ReferenceRow { name: "dc2_222", lines: 15, gates: 75, quantum_cost: 1886, swap_cost_before: 32052, total_before: 33809, swap_cost_after: 8634, total_after: 10391, reduction_pct: 69.2, prior_qc: None },
    ReferenceRow { name: "decod24-v3_46", lines: 4, gates: 9, quantum_cost: 9, swap_cost_before: 54, total_before: 63, swap_cost_after: 12, total_after: 21, reduction_pct: 66.6, prior_qc: Some(21) },
    ReferenceRow { name: "decod_217", lines: 21, gates: 80, quantum_cost: 1728, swap_cost_before: 50418, total_before: 52102, swap_cost_after: 10746, total_after: 12430, reduction_pct: 76.1, prior_qc: None },
    ReferenceRow { name: "dist_223", lines: 13, gates: 185, quantum_cost: 7601, swap_cost_before: 76164, total_before: 81591, swap_cost_after: 24828, total_after: 30255, reduction_pct: 62.9, prior_qc: None },
    ReferenceRow { name: "f51m_233", lines: 22, gates: 663, quantum_cost: 37400, swap_cost_before: 612030, total_before: 639493, swap_cost_after: 281508, total_after: 308971, reduction_pct: 51.6, prior_qc: None },
    ReferenceRow { name: "ham15_108", lines: 15, gates: 70, quantum_cost: 453, swap_cost_before: 3312, total_before: 3764, swap_cost_after: 2418, total_after: 2870, reduction_pct: 23.7, prior_qc: Some(2588) },
    ReferenceRow { name: "hwb4_52", lines: 4, gates: 11, quantum_cost: 23, swap_cost_before: 42, total_before: 65, swap_cost_after: 48, total_after: 71, reduction_pct: -9.2, prior_qc: Some(65) },
    ReferenceRow { name: "hwb5_55", lines: 5, gates: 24, quantum_cost: 104, swap_cost_before: 378, total_before: 492, swap_cost_after: 276, total_after: 390, reduction_pct: 20.7, prior_qc: Some(337) },
    ReferenceRow { name: "inc_237", lines: 16, gates: 93, quantum_cost: 2140, swap_cost_before: 40410, total_before: 42407, swap_cost_after: 11772, total_after: 13769, reduction_pct: 67.5, prior_qc: None },
    ReferenceRow { name: "mod5adder_128", lines: 6, gates: 15, quantum_cost: 83, swap_cost_before: 522, total_before: 613, swap_cost_after: 150, total_after: 241, reduction_pct: 60.6, prior_qc: Some(330) },
    ReferenceRow { name: "mod8-10_177", lines: 5, gates: 14, quantum_cost: 94, swap_cost_before: 330, total_before: 418, swap_cost_after: 234, total_after: 322, reduction_pct: 22.9, prior_qc: Some(363) },
    ReferenceRow { name: "plus127mod8192_162", lines: 13, gates: 910, quantum_cost: 73357, swap_cost_before: 508134, total_before: 551588, swap_cost_after: 403938, total_after: 447392, reduction_pct: 18.8, prior_qc: Some(503516) },
    ReferenceRow { name: "plus63mod4096_163", lines: 12, gates: 429, quantum_cost: 32539, swap_cost_before: 193446, total_before: 211559, swap_cost_after: 159258, total_after: 177371, reduction_pct: 16.1, prior_qc: Some(210400) },
    ReferenceRow { name: "plus63mod8192_164", lines: 13, gates: 492, quantum_cost: 45025, swap_cost_before: 267480, total_before: 290798, swap_cost_after: 203772, total_after: 227090, reduction_pct: 21.9, prior_qc: Some(279016) },
    ReferenceRow { name: "rd53_135", lines: 7, gates: 16, quantum_cost: 77, swap_cost_before: 558, total_before: 636, swap_cost_after: 348, total_after: 426, reduction_pct: 33.0, prior_qc: Some(303) },
    ReferenceRow { name: "rd84_313", lines: 34, gates: 104, quantum_cost: 304, swap_cost_before: 6780, total_before: 7084, swap_cost_after: 4548, total_after: 4852, reduction_pct: 31.5, prior_qc: None },
    ReferenceRow { name: "sqn_258", lines: 10, gates: 76, quantum_cost: 2122, swap_cost_before: 15258, total_before: 16784, swap_cost_after: 5562, total_after: 7088, reduction_pct: 57.7, prior_qc: None },
    ReferenceRow { name: "sym9_317", lines: 27, gates: 62, quantum_cost: 206, swap_cost_before: 3870, total_before: 4076, swap_cost_after: 1686, total_after: 1892, reduction_pct: 53.5, prior_qc: None },
    ReferenceRow { name: "z4ml_269", lines: 11, gates: 48, quantum_cost: 642, swap_cost_before: 7386, total_before: 8018, swap_cost_after: 3600, total_after: 4232, reduction_pct: 47.2, prior_qc: None },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_by_name() {
        let r = lookup("decod24-v3_46").unwrap();
        assert_eq!((r.total_before, r.total_after), (63, 21));
        assert!(lookup("nope").is_none());
        assert_eq!(ROWS.len(), 54);
    }

    #[test]
    fn some_rows_do_not_add_up() {
        assert!(lookup("3_17_13").unwrap().is_self_consistent());
        assert!(!lookup("4gt4-v0_80").unwrap().is_self_consistent());
    }
}
