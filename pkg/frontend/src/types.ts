// Wire types of the analysis service (field names match the JSON API).

export interface AdviceEntry {
  tile: string;
  value_numerator: number;
  value_denominator: number;
  value_decimal: number;
}

export interface AdviseResponse {
  schema_version: number;
  hand: string;
  k: number;
  entries: AdviceEntry[];
  recommended_index: number;
}

export interface AnalyzeResponse {
  schema_version: number;
  hand: string;
  deficiency: number;
  complete: boolean;
  witness: {
    melds: string[][];
    eye: string[];
    remainder: string[];
  };
}

export interface HealthResponse {
  status: string;
  version: string;
  horizon_cap: number;
}

export interface ServiceError {
  code: string;
  message: string;
}
